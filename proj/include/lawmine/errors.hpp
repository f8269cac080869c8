#pragma once

#include <stdexcept>
#include <string>

namespace lawmine {

enum class ErrorKind {
    UnboundVariable,
    TypeMismatch,
    SyntaxError,
    UnknownVariable,
    DomainViolation,
    IoError,
    MalformedRow,
    HeaderMismatch,
    EmptyDataset,
    DatasetTooShort,
    Exhausted,
    SampleTooLarge,
    InstanceTooLarge,
    DomainError,
    NoSurvivors,
    SchemaMismatch,
    UnsatisfiablePlant,
    QueryTooLarge,
    ConfigError,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::UnboundVariable: return "UnboundVariable";
        case ErrorKind::TypeMismatch: return "TypeMismatch";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownVariable: return "UnknownVariable";
        case ErrorKind::DomainViolation: return "DomainViolation";
        case ErrorKind::IoError: return "IoError";
        case ErrorKind::MalformedRow: return "MalformedRow";
        case ErrorKind::HeaderMismatch: return "HeaderMismatch";
        case ErrorKind::EmptyDataset: return "EmptyDataset";
        case ErrorKind::DatasetTooShort: return "DatasetTooShort";
        case ErrorKind::Exhausted: return "Exhausted";
        case ErrorKind::SampleTooLarge: return "SampleTooLarge";
        case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::NoSurvivors: return "NoSurvivors";
        case ErrorKind::SchemaMismatch: return "SchemaMismatch";
        case ErrorKind::UnsatisfiablePlant: return "UnsatisfiablePlant";
        case ErrorKind::QueryTooLarge: return "QueryTooLarge";
        case ErrorKind::ConfigError: return "ConfigError";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace lawmine

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace lawmine {

// =============================================================================
// Values and vocabulary
// =============================================================================

// A cell or constant. Numeric-looking inputs are kept as exact rationals;
// everything else as text. Nominal comparisons go through the canonical text
// form, so the CSV cell 53 and the declared nominal value "53" are equal.
class Value {
public:
    Value() : v_(std::string()) {}
    Value(std::string s) : v_(std::move(s)) {}
    Value(Rational r) : v_(r) {}
    Value(std::int64_t n) : v_(Rational(n)) {}

    bool is_number() const { return std::holds_alternative<Rational>(v_); }
    const Rational& number() const { return std::get<Rational>(v_); }

    std::string text() const {
        if (is_number()) return number().str();
        return std::get<std::string>(v_);
    }

    // Parses numeric-looking text into a rational, otherwise keeps the text.
    static Value of(const std::string& raw) {
        Rational r;
        if (Rational::parse(raw, r)) return Value(r);
        return Value(raw);
    }

    friend bool operator==(const Value& a, const Value& b) {
        if (a.is_number() && b.is_number()) return a.number() == b.number();
        return a.text() == b.text();
    }
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
    friend bool operator<(const Value& a, const Value& b) {
        if (a.is_number() && b.is_number()) return a.number() < b.number();
        return a.text() < b.text();
    }

private:
    std::variant<std::string, Rational> v_;
};

enum class VarKind { Nominal, Ordinal };

struct Interval {
    Rational lo, hi;
};

// Domain of a variable: a finite value set (nominal) or an interval (ordinal).
struct Domain {
    VarKind kind = VarKind::Nominal;
    std::vector<std::string> values;  // nominal, canonical text, sorted unique
    Interval range{};                 // ordinal

    static Domain nominal(std::vector<std::string> vals) {
        Domain d;
        d.kind = VarKind::Nominal;
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        d.values = std::move(vals);
        if (d.values.empty()) fail(ErrorKind::DomainViolation, "empty nominal domain");
        return d;
    }
    static Domain ordinal(Rational lo, Rational hi) {
        if (hi < lo) fail(ErrorKind::DomainViolation, "ordinal domain with min > max");
        Domain d;
        d.kind = VarKind::Ordinal;
        d.range = {lo, hi};
        return d;
    }

    bool contains(const Value& v) const {
        if (kind == VarKind::Nominal)
            return std::binary_search(values.begin(), values.end(), v.text());
        if (!v.is_number()) return false;
        return range.lo <= v.number() && v.number() <= range.hi;
    }
};

struct Variable {
    std::string name;
    VarKind kind = VarKind::Nominal;
    Domain domain;
    std::string unit;  // optional free-text label
};

class Vocabulary {
public:
    int add(Variable v) {
        if (v.name.empty()) fail(ErrorKind::DomainViolation, "variable with empty name");
        if (index_.count(v.name))
            fail(ErrorKind::DomainViolation, "duplicate variable " + v.name);
        if (v.kind != v.domain.kind)
            fail(ErrorKind::DomainViolation, "variable kind/domain mismatch for " + v.name);
        int id = (int)vars_.size();
        index_[v.name] = id;
        vars_.push_back(std::move(v));
        return id;
    }

    int find(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? -1 : it->second;
    }
    int require(const std::string& name) const {
        int id = find(name);
        if (id < 0) fail(ErrorKind::UnknownVariable, name);
        return id;
    }

    const Variable& at(int id) const { return vars_.at((std::size_t)id); }
    std::size_t size() const { return vars_.size(); }
    bool empty() const { return vars_.empty(); }
    const std::vector<Variable>& variables() const { return vars_; }

private:
    std::vector<Variable> vars_;
    std::map<std::string, int> index_;
};

// Language bias: operator-supplied restrictions on the constraint language.
struct Bias {
    std::set<std::string> excluded_variables;
    std::set<std::pair<std::string, std::string>> excluded_pairs;  // sorted pairs
    std::map<std::string, Domain> domain_overrides;
    int arity_limit = 3;
    bool enable_aggregates = false;
    std::set<std::string> force_nominal;
    std::vector<Rational> coefficients{Rational(1), Rational(20), Rational(64),
                                       Rational(65535)};

    void exclude_pair(const std::string& a, const std::string& b) {
        excluded_pairs.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
    }
    bool pair_excluded(const std::string& a, const std::string& b) const {
        return excluded_pairs.count(a < b ? std::make_pair(a, b)
                                          : std::make_pair(b, a)) > 0;
    }

    void validate(const std::vector<std::string>& declared) const {
        if (arity_limit < 1) fail(ErrorKind::ConfigError, "arity_limit must be >= 1");
        auto known = [&](const std::string& n) {
            return std::find(declared.begin(), declared.end(), n) != declared.end();
        };
        for (const auto& n : excluded_variables)
            if (!known(n)) fail(ErrorKind::UnknownVariable, "bias excludes " + n);
        for (const auto& p : excluded_pairs) {
            if (!known(p.first)) fail(ErrorKind::UnknownVariable, "bias pair " + p.first);
            if (!known(p.second)) fail(ErrorKind::UnknownVariable, "bias pair " + p.second);
        }
        for (const auto& kv : domain_overrides)
            if (!known(kv.first)) fail(ErrorKind::UnknownVariable, "bias override " + kv.first);
    }
};

// =============================================================================
// Predicates
// =============================================================================

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

inline const char* cmp_op_text(CmpOp op) {
    switch (op) {
        case CmpOp::Eq: return "=";
        case CmpOp::Ne: return "!=";
        case CmpOp::Lt: return "<";
        case CmpOp::Le: return "<=";
        case CmpOp::Gt: return ">";
        case CmpOp::Ge: return ">=";
    }
    return "?";
}

inline CmpOp negate_op(CmpOp op) {
    switch (op) {
        case CmpOp::Eq: return CmpOp::Ne;
        case CmpOp::Ne: return CmpOp::Eq;
        case CmpOp::Lt: return CmpOp::Ge;
        case CmpOp::Ge: return CmpOp::Lt;
        case CmpOp::Gt: return CmpOp::Le;
        case CmpOp::Le: return CmpOp::Gt;
    }
    return op;
}

// c1 * var + c0 over one other ordinal variable.
struct LinearExpr {
    Rational coeff;
    int var = -1;
    Rational offset;
};

// Atomic comparison: subject op rhs, where rhs is a constant from the
// subject's domain or a linear expression of one other ordinal variable.
struct Predicate {
    int subject = -1;
    CmpOp op = CmpOp::Eq;
    bool linear = false;
    Value constant;    // when !linear
    LinearExpr expr;   // when linear

    static Predicate constant_rhs(int subject, CmpOp op, Value c) {
        Predicate p;
        p.subject = subject;
        p.op = op;
        p.constant = std::move(c);
        return p;
    }
    static Predicate linear_rhs(int subject, CmpOp op, Rational coeff, int var,
                                Rational offset) {
        Predicate p;
        p.subject = subject;
        p.op = op;
        p.linear = true;
        p.expr = {coeff, var, offset};
        return p;
    }
};

inline Predicate negate(const Predicate& p) {
    Predicate q = p;
    q.op = negate_op(p.op);
    return q;
}

// Canonical atom form: op restricted to {Eq, Ge, Le}; Ne/Lt/Gt become the
// complement's negation. Complementary predicates (X>=t vs X<t) thus share
// one atom with opposite polarity.
struct Literal {
    Predicate atom;       // op in {Eq, Ge, Le}
    bool positive = true;
};

inline Literal to_literal(const Predicate& p) {
    switch (p.op) {
        case CmpOp::Eq:
        case CmpOp::Ge:
        case CmpOp::Le:
            return {p, true};
        default: {
            return {negate(p), false};
        }
    }
}

inline Predicate from_literal(const Literal& l) {
    return l.positive ? l.atom : negate(l.atom);
}

inline int compare_values(const Value& a, const Value& b) {
    bool an = a.is_number(), bn = b.is_number();
    if (an != bn) return an ? -1 : 1;
    if (an) {
        if (a.number() < b.number()) return -1;
        if (b.number() < a.number()) return 1;
        return 0;
    }
    return a.text().compare(b.text());
}

inline int compare_rationals(const Rational& a, const Rational& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

// Total order over canonical atoms; used for clause normalization and dedup.
inline int compare_atoms(const Predicate& a, const Predicate& b) {
    if (a.subject != b.subject) return a.subject < b.subject ? -1 : 1;
    if (a.op != b.op) return (int)a.op < (int)b.op ? -1 : 1;
    if (a.linear != b.linear) return a.linear ? 1 : -1;
    if (!a.linear) return compare_values(a.constant, b.constant);
    if (a.expr.var != b.expr.var) return a.expr.var < b.expr.var ? -1 : 1;
    if (int c = compare_rationals(a.expr.coeff, b.expr.coeff)) return c;
    return compare_rationals(a.expr.offset, b.expr.offset);
}

inline bool same_atom(const Predicate& a, const Predicate& b) {
    return compare_atoms(a, b) == 0;
}

inline int compare_literals(const Literal& a, const Literal& b) {
    if (int c = compare_atoms(a.atom, b.atom)) return c;
    if (a.positive == b.positive) return 0;
    return a.positive ? 1 : -1;  // negative literal sorts first
}

inline bool same_predicate(const Predicate& a, const Predicate& b) {
    Literal la = to_literal(a), lb = to_literal(b);
    return compare_literals(la, lb) == 0;
}

inline bool complementary(const Predicate& a, const Predicate& b) {
    Literal la = to_literal(a), lb = to_literal(b);
    return same_atom(la.atom, lb.atom) && la.positive != lb.positive;
}

inline void predicate_variables(const Predicate& p, std::set<int>& out) {
    out.insert(p.subject);
    if (p.linear) out.insert(p.expr.var);
}

// Structural well-formedness against a vocabulary (the domain check).
inline void check_predicate(const Predicate& p, const Vocabulary& vocab) {
    const Variable& subject = vocab.at(p.subject);
    if (subject.kind == VarKind::Nominal) {
        if (p.op != CmpOp::Eq && p.op != CmpOp::Ne)
            fail(ErrorKind::TypeMismatch,
                 "nominal variable " + subject.name + " only supports = and !=");
        if (p.linear)
            fail(ErrorKind::TypeMismatch,
                 "nominal variable " + subject.name + " compared to an expression");
        if (!subject.domain.contains(p.constant))
            fail(ErrorKind::DomainViolation,
                 subject.name + " has no value " + p.constant.text());
        return;
    }
    if (p.linear) {
        const Variable& other = vocab.at(p.expr.var);
        if (other.kind != VarKind::Ordinal)
            fail(ErrorKind::TypeMismatch,
                 "linear term over non-ordinal variable " + other.name);
        if (p.expr.var == p.subject)
            fail(ErrorKind::TypeMismatch,
                 "linear term references its own subject " + subject.name);
        return;
    }
    if (!p.constant.is_number())
        fail(ErrorKind::TypeMismatch,
             "ordinal variable " + subject.name + " compared to text");
    if (!subject.domain.contains(p.constant))
        fail(ErrorKind::DomainViolation,
             subject.name + "=" + p.constant.text() + " is outside its domain");
}

// =============================================================================
// Constraints and clauses
// =============================================================================

enum class Connective { And, Or };
enum class Provenance { Seeded, Generalized, Refined, UserQuery };

// Implication-anchored formula: conjunction of antecedent predicates implies
// the consequent predicates joined by one connective. An empty antecedent is
// a bare (possibly compound) fact.
struct Constraint {
    std::vector<Predicate> antecedent;
    std::vector<Predicate> consequent;
    Connective connective = Connective::Or;
    Provenance provenance = Provenance::UserQuery;

    static Constraint fact(Predicate p) {
        Constraint c;
        c.consequent.push_back(std::move(p));
        return c;
    }
    static Constraint implication(std::vector<Predicate> ante,
                                  std::vector<Predicate> cons,
                                  Connective conn = Connective::Or) {
        Constraint c;
        c.antecedent = std::move(ante);
        c.consequent = std::move(cons);
        c.connective = conn;
        return c;
    }
};

struct Clause {
    std::vector<Literal> lits;  // sorted, unique
};

struct ClauseSet {
    std::vector<Clause> clauses;  // sorted by literal sequence
};

inline int compare_clauses(const Clause& a, const Clause& b) {
    std::size_t n = std::min(a.lits.size(), b.lits.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = compare_literals(a.lits[i], b.lits[i])) return c;
    if (a.lits.size() != b.lits.size()) return a.lits.size() < b.lits.size() ? -1 : 1;
    return 0;
}

// Normalizes in place: literal sort, in-clause dedup, drop of clauses holding
// a complementary pair, clause-level sort and dedup.
inline void normalize(ClauseSet& cs) {
    std::vector<Clause> kept;
    for (auto& cl : cs.clauses) {
        std::sort(cl.lits.begin(), cl.lits.end(),
                  [](const Literal& a, const Literal& b) { return compare_literals(a, b) < 0; });
        cl.lits.erase(std::unique(cl.lits.begin(), cl.lits.end(),
                                  [](const Literal& a, const Literal& b) {
                                      return compare_literals(a, b) == 0;
                                  }),
                      cl.lits.end());
        bool taut = false;
        for (std::size_t i = 0; i + 1 < cl.lits.size() && !taut; ++i)
            if (same_atom(cl.lits[i].atom, cl.lits[i + 1].atom) &&
                cl.lits[i].positive != cl.lits[i + 1].positive)
                taut = true;
        if (!taut && !cl.lits.empty()) kept.push_back(std::move(cl));
    }
    std::sort(kept.begin(), kept.end(),
              [](const Clause& a, const Clause& b) { return compare_clauses(a, b) < 0; });
    kept.erase(std::unique(kept.begin(), kept.end(),
                           [](const Clause& a, const Clause& b) {
                               return compare_clauses(a, b) == 0;
                           }),
               kept.end());
    cs.clauses = std::move(kept);
}

// Rewrites a constraint into an equivalent clause set. An implication with an
// AND consequent distributes into one clause per conjunct; an OR consequent
// yields a single clause.
inline ClauseSet clausify(const Constraint& c) {
    ClauseSet cs;
    std::vector<Literal> negated_antecedent;
    for (const auto& p : c.antecedent) {
        Literal l = to_literal(p);
        l.positive = !l.positive;
        negated_antecedent.push_back(l);
    }
    if (c.connective == Connective::Or && !c.consequent.empty()) {
        Clause cl;
        cl.lits = negated_antecedent;
        for (const auto& p : c.consequent) cl.lits.push_back(to_literal(p));
        cs.clauses.push_back(std::move(cl));
    } else {
        for (const auto& p : c.consequent) {
            Clause cl;
            cl.lits = negated_antecedent;
            cl.lits.push_back(to_literal(p));
            cs.clauses.push_back(std::move(cl));
        }
    }
    normalize(cs);
    return cs;
}

// Stable text signature of the canonical clause form; two constraints with
// equal signatures are logically identical clause sets.
inline std::string clause_signature(const ClauseSet& cs) {
    std::string sig;
    for (const auto& cl : cs.clauses) {
        for (const auto& l : cl.lits) {
            sig += l.positive ? '+' : '-';
            sig += std::to_string(l.atom.subject);
            sig += (char)('a' + (int)l.atom.op);
            if (l.atom.linear) {
                sig += '~';
                sig += l.atom.expr.coeff.str();
                sig += '*';
                sig += std::to_string(l.atom.expr.var);
                sig += '+';
                sig += l.atom.expr.offset.str();
            } else {
                sig += '\'';
                sig += l.atom.constant.text();
            }
            sig += '|';
        }
        sig += ';';
    }
    return sig;
}

inline std::string signature(const Constraint& c) { return clause_signature(clausify(c)); }

// Number of distinct variables mentioned anywhere in the constraint.
inline int arity(const Constraint& c) {
    std::set<int> vars;
    for (const auto& p : c.antecedent) predicate_variables(p, vars);
    for (const auto& p : c.consequent) predicate_variables(p, vars);
    return (int)vars.size();
}

// Well-formedness: predicates domain-checked, consequent non-empty, no
// repeated predicate, no predicate together with its complement on one side.
inline void check_constraint(const Constraint& c, const Vocabulary& vocab) {
    if (c.consequent.empty())
        fail(ErrorKind::DomainViolation, "constraint with empty consequent");
    for (const auto& p : c.antecedent) check_predicate(p, vocab);
    for (const auto& p : c.consequent) check_predicate(p, vocab);
    auto no_dup_or_clash = [](const std::vector<Predicate>& side, const char* which) {
        for (std::size_t i = 0; i < side.size(); ++i)
            for (std::size_t j = i + 1; j < side.size(); ++j) {
                if (same_predicate(side[i], side[j]))
                    fail(ErrorKind::DomainViolation,
                         std::string("repeated predicate in ") + which);
                if (complementary(side[i], side[j]))
                    fail(ErrorKind::DomainViolation,
                         std::string("complementary predicates in ") + which);
            }
    };
    no_dup_or_clash(c.antecedent, "antecedent");
    no_dup_or_clash(c.consequent, "consequent");
}

// Builds a constant-rhs predicate, normalizing the constant to the subject's
// kind (nominal constants become text) and running the domain check.
inline Predicate make_pred(const Vocabulary& vocab, int subject, CmpOp op, Value constant) {
    const Variable& var = vocab.at(subject);
    if (var.kind == VarKind::Nominal) constant = Value(constant.text());
    Predicate p = Predicate::constant_rhs(subject, op, std::move(constant));
    check_predicate(p, vocab);
    return p;
}

inline Predicate make_linear_pred(const Vocabulary& vocab, int subject, CmpOp op,
                                  Rational coeff, int var, Rational offset) {
    Predicate p = Predicate::linear_rhs(subject, op, coeff, var, offset);
    check_predicate(p, vocab);
    return p;
}

// =============================================================================
// Evaluation
// =============================================================================

// Three-valued truth. Unknown marks rows whose null cells leave the
// constraint undecided; such rows can neither support nor falsify it.
enum class Truth : unsigned char { False = 0, True = 1, Unknown = 2 };

inline Truth truth_and(Truth a, Truth b) {
    if (a == Truth::False || b == Truth::False) return Truth::False;
    if (a == Truth::Unknown || b == Truth::Unknown) return Truth::Unknown;
    return Truth::True;
}
inline Truth truth_or(Truth a, Truth b) {
    if (a == Truth::True || b == Truth::True) return Truth::True;
    if (a == Truth::Unknown || b == Truth::Unknown) return Truth::Unknown;
    return Truth::False;
}
inline Truth truth_not(Truth a) {
    if (a == Truth::Unknown) return Truth::Unknown;
    return a == Truth::True ? Truth::False : Truth::True;
}

namespace detail {

inline bool apply_cmp(CmpOp op, int cmp) {
    switch (op) {
        case CmpOp::Eq: return cmp == 0;
        case CmpOp::Ne: return cmp != 0;
        case CmpOp::Lt: return cmp < 0;
        case CmpOp::Le: return cmp <= 0;
        case CmpOp::Gt: return cmp > 0;
        case CmpOp::Ge: return cmp >= 0;
    }
    return false;
}

}  // namespace detail

// Lookup: callable const Value*(int variable_id); nullptr means null/missing.
template <class Lookup>
Truth eval_predicate3(const Predicate& p, const Vocabulary& vocab, Lookup&& row) {
    const Value* subject = row(p.subject);
    if (!subject) return Truth::Unknown;
    const Variable& var = vocab.at(p.subject);
    if (var.kind == VarKind::Nominal) {
        int cmp = subject->text().compare(p.constant.text());
        return detail::apply_cmp(p.op, cmp == 0 ? 0 : (cmp < 0 ? -1 : 1)) ? Truth::True
                                                                          : Truth::False;
    }
    if (!subject->is_number()) return Truth::Unknown;
    Rational rhs;
    if (p.linear) {
        const Value* other = row(p.expr.var);
        if (!other || !other->is_number()) return Truth::Unknown;
        rhs = p.expr.coeff * other->number() + p.expr.offset;
    } else {
        rhs = p.constant.number();
    }
    return detail::apply_cmp(p.op, compare_rationals(subject->number(), rhs))
               ? Truth::True
               : Truth::False;
}

template <class Lookup>
Truth eval3(const Constraint& c, const Vocabulary& vocab, Lookup&& row) {
    Truth ante = Truth::True;
    for (const auto& p : c.antecedent) {
        ante = truth_and(ante, eval_predicate3(p, vocab, row));
        if (ante == Truth::False) return Truth::True;  // vacuously satisfied
    }
    Truth cons = c.connective == Connective::And ? Truth::True : Truth::False;
    for (const auto& p : c.consequent) {
        Truth t = eval_predicate3(p, vocab, row);
        cons = c.connective == Connective::And ? truth_and(cons, t) : truth_or(cons, t);
    }
    if (ante == Truth::False) return Truth::True;
    if (ante == Truth::Unknown) return cons == Truth::True ? Truth::True : Truth::Unknown;
    return cons;
}

// Strict two-valued evaluation over an explicit assignment. Every variable
// the constraint mentions must be present, with a kind-compatible value.
inline bool evaluate(const Constraint& c, const Vocabulary& vocab,
                     const std::map<std::string, Value>& assignment) {
    std::set<int> vars;
    for (const auto& p : c.antecedent) predicate_variables(p, vars);
    for (const auto& p : c.consequent) predicate_variables(p, vars);
    std::vector<const Value*> bound(vocab.size(), nullptr);
    for (int id : vars) {
        const Variable& var = vocab.at(id);
        auto it = assignment.find(var.name);
        if (it == assignment.end()) fail(ErrorKind::UnboundVariable, var.name);
        if (var.kind == VarKind::Ordinal && !it->second.is_number())
            fail(ErrorKind::TypeMismatch,
                 var.name + " is ordinal but bound to \"" + it->second.text() + "\"");
        bound[(std::size_t)id] = &it->second;
    }
    Truth t = eval3(c, vocab, [&](int id) { return bound[(std::size_t)id]; });
    return t == Truth::True;
}

// =============================================================================
// Interval reasoning over declared domains
// =============================================================================
//
// Each constant-rhs literal over an ordinal variable denotes a subset of the
// line; nominal literals denote subsets of the declared value set. These
// sound checks power static tautology/contradiction detection and the
// ordinal saturation axioms usedby the prover.

namespace detail {

// Constant-rhs ordinal literal as an interval with open/closed ends,
// or a punctured line for negated equality.
struct LineSet {
    // kinds: interval [lo,hi] with open flags, or "not equal to a point"
    bool punctured = false;
    Rational point;      // punctured case
    bool has_lo = false, has_hi = false;
    Rational lo, hi;
    bool lo_open = false, hi_open = false;

    static LineSet everything() { return LineSet{}; }
};

inline LineSet literal_line_set(const Literal& l) {
    LineSet s;
    const Predicate& a = l.atom;
    const Rational c = a.constant.is_number() ? a.constant.number() : Rational(0);
    switch (a.op) {
        case CmpOp::Eq:
            if (l.positive) {
                s.has_lo = s.has_hi = true;
                s.lo = s.hi = c;
            } else {
                s.punctured = true;
                s.point = c;
            }
            break;
        case CmpOp::Ge:
            if (l.positive) {
                s.has_lo = true;
                s.lo = c;
            } else {
                s.has_hi = true;
                s.hi = c;
                s.hi_open = true;
            }
            break;
        case CmpOp::Le:
            if (l.positive) {
                s.has_hi = true;
                s.hi = c;
            } else {
                s.has_lo = true;
                s.lo = c;
                s.lo_open = true;
            }
            break;
        default:
            break;
    }
    return s;
}

// Is [lo,hi] (the declared domain) a subset of s?
inline bool domain_subset(const Interval& d, const LineSet& s) {
    if (s.punctured) return s.point < d.lo || d.hi < s.point;
    if (s.has_lo && (d.lo < s.lo || (s.lo_open && d.lo == s.lo))) return false;
    if (s.has_hi && (s.hi < d.hi || (s.hi_open && d.hi == s.hi))) return false;
    return true;
}

// Is s ∩ [lo,hi] empty?
inline bool domain_disjoint(const Interval& d, const LineSet& s) {
    if (s.punctured) return d.lo == d.hi && d.lo == s.point;
    Rational lo = d.lo, hi = d.hi;
    bool lo_open = false, hi_open = false;
    if (s.has_lo && (lo < s.lo || (lo == s.lo && s.lo_open))) {
        lo = s.lo;
        lo_open = s.lo_open;
    }
    if (s.has_hi && (s.hi < hi || (hi == s.hi && s.hi_open))) {
        hi = s.hi;
        hi_open = s.hi_open;
    }
    if (hi < lo) return true;
    if (lo == hi && (lo_open || hi_open)) return true;
    return false;
}

// Is (s1 ∩ domain) a subset of s2? Sound approximation.
inline bool subset_within(const Interval& d, const LineSet& s1, const LineSet& s2) {
    if (s2.punctured) {
        // s1 must avoid the puncture point.
        if (s1.punctured) return s1.point == s2.point;
        LineSet pt;
        pt.has_lo = pt.has_hi = true;
        pt.lo = pt.hi = s2.point;
        Interval clipped = d;
        if (s1.has_lo && clipped.lo < s1.lo) clipped.lo = s1.lo;
        if (s1.has_hi && s1.hi < clipped.hi) clipped.hi = s1.hi;
        if (clipped.hi < clipped.lo) return true;
        // open endpoints of s1 shrink the clipped region only at single
        // points; ignore, staying sound for the disjointness test below.
        return clipped.hi < s2.point || s2.point < clipped.lo ||
               (s1.punctured && s1.point == s2.point);
    }
    if (s1.punctured) {
        // Punctured sets are only contained in supersets of the domain minus
        // a point; require s2 to cover the whole domain.
        return domain_subset(d, s2);
    }
    Rational lo = d.lo, hi = d.hi;
    bool lo_open = false, hi_open = false;
    if (s1.has_lo && (lo < s1.lo || (lo == s1.lo && s1.lo_open))) {
        lo = s1.lo;
        lo_open = s1.lo_open;
    }
    if (s1.has_hi && (s1.hi < hi || (hi == s1.hi && s1.hi_open))) {
        hi = s1.hi;
        hi_open = s1.hi_open;
    }
    if (hi < lo || (lo == hi && (lo_open || hi_open))) return true;  // empty
    if (s2.has_lo && (lo < s2.lo || (lo == s2.lo && s2.lo_open && !lo_open))) return false;
    if (s2.has_hi && (s2.hi < hi || (hi == s2.hi && s2.hi_open && !hi_open))) return false;
    return true;
}

// Linear literal subject >= coeff*v + offset (or <=, =) over the rhs domain.
// Evaluated at the rhs interval endpoints; linearity makes that exact.
inline Interval linear_range(const LinearExpr& e, const Interval& rhs_domain) {
    Rational a = e.coeff * rhs_domain.lo + e.offset;
    Rational b = e.coeff * rhs_domain.hi + e.offset;
    if (b < a) std::swap(a, b);
    return {a, b};
}

}  // namespace detail

// True when the literal holds for every in-domain valuation.
inline bool literal_always_true(const Literal& l, const Vocabulary& vocab) {
    const Variable& var = vocab.at(l.atom.subject);
    if (var.kind == VarKind::Nominal) {
        // Eq: true everywhere only on a single-value domain; Ne: never (the
        // constant is in-domain by construction).
        if (l.atom.op != CmpOp::Eq) return false;
        bool in = var.domain.contains(l.atom.constant);
        if (l.positive) return in && var.domain.values.size() == 1;
        return !in;
    }
    const Interval& d = var.domain.range;
    if (!l.atom.linear) return detail::domain_subset(d, detail::literal_line_set(l));
    // subject cmp coeff*v+offset: compare subject range with rhs range.
    const Interval rhs = detail::linear_range(l.atom.expr, vocab.at(l.atom.expr.var).domain.range);
    Literal probe = l;
    probe.atom.linear = false;
    switch (l.atom.op) {
        case CmpOp::Ge:
            // holds for all iff subject_min >= rhs_max
            probe.atom.constant = Value(rhs.hi);
            return l.positive ? detail::domain_subset(d, detail::literal_line_set(probe))
                              : (probe.atom.constant = Value(rhs.lo),
                                 detail::domain_subset(d, detail::literal_line_set(probe)));
        case CmpOp::Le:
            probe.atom.constant = Value(rhs.lo);
            return l.positive ? detail::domain_subset(d, detail::literal_line_set(probe))
                              : (probe.atom.constant = Value(rhs.hi),
                                 detail::domain_subset(d, detail::literal_line_set(probe)));
        case CmpOp::Eq:
            if (l.positive) return false;  // equality over a real range is never universal
            // != always true iff the ranges never meet
            return rhs.hi < d.lo || d.hi < rhs.lo;
        default:
            return false;
    }
}

// True when the literal fails for every in-domain valuation.
inline bool literal_always_false(const Literal& l, const Vocabulary& vocab) {
    Literal flipped = l;
    flipped.positive = !flipped.positive;
    return literal_always_true(flipped, vocab);
}

// Sound check: does l1 holding force l2 (over declared domains)?
// Only same-variable constant forms and same-(subject,rhs-var) linear forms
// are related; everything else reports false.
inline bool literal_implies(const Literal& l1, const Literal& l2, const Vocabulary& vocab) {
    if (literal_always_false(l1, vocab)) return true;
    if (literal_always_true(l2, vocab)) return true;
    if (l1.atom.subject != l2.atom.subject) return false;
    const Variable& var = vocab.at(l1.atom.subject);
    if (var.kind == VarKind::Nominal) {
        // Same atom handled by polarity; distinct values relate only as
        // Eq(a) -> Ne(b).
        if (same_atom(l1.atom, l2.atom)) return l1.positive == l2.positive;
        if (l1.positive && !l2.positive && l1.atom.op == CmpOp::Eq &&
            l2.atom.op == CmpOp::Eq)
            return l1.atom.constant.text() != l2.atom.constant.text();
        return false;
    }
    if (!l1.atom.linear && !l2.atom.linear) {
        return detail::subset_within(var.domain.range, detail::literal_line_set(l1),
                                     detail::literal_line_set(l2));
    }
    if (l1.atom.linear && l2.atom.linear && l1.atom.expr.var == l2.atom.expr.var &&
        l1.positive && l2.positive) {
        // subject >= a1*v+b1 implies subject >= a2*v+b2 iff a1*v+b1 >= a2*v+b2
        // across v's domain; checking both endpoints suffices.
        const Interval& dv = vocab.at(l1.atom.expr.var).domain.range;
        auto ge_everywhere = [&](const LinearExpr& hi_e, const LinearExpr& lo_e) {
            Rational at_lo = (hi_e.coeff - lo_e.coeff) * dv.lo + (hi_e.offset - lo_e.offset);
            Rational at_hi = (hi_e.coeff - lo_e.coeff) * dv.hi + (hi_e.offset - lo_e.offset);
            return at_lo >= Rational(0) && at_hi >= Rational(0);
        };
        if (l1.atom.op == CmpOp::Ge && l2.atom.op == CmpOp::Ge)
            return ge_everywhere(l1.atom.expr, l2.atom.expr);
        if (l1.atom.op == CmpOp::Le && l2.atom.op == CmpOp::Le)
            return ge_everywhere(l2.atom.expr, l1.atom.expr);
        if (l1.atom.op == CmpOp::Eq && l2.atom.op == CmpOp::Ge)
            return ge_everywhere(l1.atom.expr, l2.atom.expr);
        if (l1.atom.op == CmpOp::Eq && l2.atom.op == CmpOp::Le)
            return ge_everywhere(l2.atom.expr, l1.atom.expr);
        return false;
    }
    return false;
}

// Sound check: can l1 and l2 hold together somewhere in the domain? False
// positives are fine (reported as "maybe"); false negatives are not.
inline bool literals_conflict(const Literal& l1, const Literal& l2, const Vocabulary& vocab) {
    Literal neg = l2;
    neg.positive = !neg.positive;
    return literal_implies(l1, neg, vocab);
}

// True when l1 ∪ l2 covers the whole domain (clause of the two is valid).
inline bool literals_cover_domain(const Literal& l1, const Literal& l2,
                                  const Vocabulary& vocab) {
    Literal neg = l1;
    neg.positive = !neg.positive;
    return literal_implies(neg, l2, vocab);
}

// =============================================================================
// Static status
// =============================================================================

enum class StaticStatus { Tautology, Contradiction, Contingent };

// Decides tautology/contradiction without data: propositional structure,
// domain emptiness of literals, and interval bound propagation.
inline StaticStatus static_status(const Constraint& c, const Vocabulary& vocab) {
    ClauseSet cs = clausify(c);
    if (cs.clauses.empty()) return StaticStatus::Tautology;

    auto clause_valid = [&](const Clause& cl) {
        for (const auto& l : cl.lits)
            if (literal_always_true(l, vocab)) return true;
        for (std::size_t i = 0; i < cl.lits.size(); ++i)
            for (std::size_t j = i + 1; j < cl.lits.size(); ++j)
                if (literals_cover_domain(cl.lits[i], cl.lits[j], vocab)) return true;
        return false;
    };

    bool all_valid = true;
    for (const auto& cl : cs.clauses)
        if (!clause_valid(cl)) {
            all_valid = false;
            break;
        }
    if (all_valid) return StaticStatus::Tautology;

    // Contradiction: a clause with no satisfiable literal, or two forced
    // unit clauses that cannot hold together.
    std::vector<Literal> units;
    for (const auto& cl : cs.clauses) {
        std::vector<Literal> live;
        for (const auto& l : cl.lits)
            if (!literal_always_false(l, vocab)) live.push_back(l);
        if (live.empty()) return StaticStatus::Contradiction;
        if (live.size() == 1) units.push_back(live[0]);
    }
    for (std::size_t i = 0; i < units.size(); ++i)
        for (std::size_t j = i + 1; j < units.size(); ++j)
            if (literals_conflict(units[i], units[j], vocab))
                return StaticStatus::Contradiction;
    return StaticStatus::Contingent;
}

}  // namespace lawmine

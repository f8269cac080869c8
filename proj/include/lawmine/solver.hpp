#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "language.hpp"
#include "parse.hpp"

namespace lawmine {

// =============================================================================
// Atom interning
// =============================================================================

// Maps canonical predicates (op in {Eq, Ge, Le}) to dense propositional atom
// ids. Complementary predicates meet here as one atom with opposite signs.
class AtomTable {
public:
    int intern(const Predicate& atom) {
        auto it = index_.find(atom);
        if (it != index_.end()) return it->second;
        int id = (int)atoms_.size();
        index_.emplace(atom, id);
        atoms_.push_back(atom);
        return id;
    }
    int find(const Predicate& atom) const {
        auto it = index_.find(atom);
        return it == index_.end() ? -1 : it->second;
    }
    const Predicate& at(int id) const { return atoms_.at((std::size_t)id); }
    std::size_t size() const { return atoms_.size(); }

    // Literal encoding: atom id i becomes ±(i+1).
    int encode(const Literal& l) {
        int id = intern(l.atom);
        return l.positive ? id + 1 : -(id + 1);
    }

private:
    struct Less {
        bool operator()(const Predicate& a, const Predicate& b) const {
            return compare_atoms(a, b) < 0;
        }
    };
    std::vector<Predicate> atoms_;
    std::map<Predicate, int, Less> index_;
};

using CnfClause = std::vector<int>;

inline CnfClause encode_clause(const Clause& cl, AtomTable& atoms) {
    CnfClause out;
    out.reserve(cl.lits.size());
    for (const auto& l : cl.lits) out.push_back(atoms.encode(l));
    return out;
}

// =============================================================================
// DPLL
// =============================================================================

// Plain iterative DPLL with unit propagation and chronological backtracking.
// Theories here are small (hundreds of clauses); no watched literals needed.
class CnfSolver {
public:
    explicit CnfSolver(int natoms) : assign_((std::size_t)natoms, 0) {}

    void add(CnfClause clause) {
        if (clause.empty()) has_empty_ = true;
        clauses_.push_back(std::move(clause));
    }

    bool solve() {
        if (has_empty_) return false;
        trail_.clear();
        std::fill(assign_.begin(), assign_.end(), 0);
        for (;;) {
            int conflict = propagate();
            if (conflict) {
                if (!backtrack()) return false;
                continue;
            }
            int lit = pick_branch();
            if (lit == 0) return true;
            push(lit, true);
        }
    }

    // Valid after solve() returned true. +1 true, -1 false, 0 unconstrained.
    const std::vector<signed char>& model() const { return assign_; }

private:
    std::vector<CnfClause> clauses_;
    std::vector<signed char> assign_;
    std::vector<std::pair<int, bool>> trail_;  // (lit, is_decision)
    bool has_empty_ = false;

    signed char value(int lit) const {
        signed char v = assign_[(std::size_t)(std::abs(lit) - 1)];
        return lit > 0 ? v : (signed char)-v;
    }
    void push(int lit, bool decision) {
        assign_[(std::size_t)(std::abs(lit) - 1)] = lit > 0 ? 1 : -1;
        trail_.emplace_back(lit, decision);
    }

    // Returns 1 on conflict.
    int propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& cl : clauses_) {
                int unassigned = 0, last = 0;
                bool sat = false;
                for (int lit : cl) {
                    signed char v = value(lit);
                    if (v > 0) { sat = true; break; }
                    if (v == 0) { ++unassigned; last = lit; }
                }
                if (sat) continue;
                if (unassigned == 0) return 1;
                if (unassigned == 1) {
                    push(last, false);
                    changed = true;
                }
            }
        }
        return 0;
    }

    bool backtrack() {
        while (!trail_.empty()) {
            auto [lit, decision] = trail_.back();
            trail_.pop_back();
            assign_[(std::size_t)(std::abs(lit) - 1)] = 0;
            if (decision) {
                push(-lit, false);  // flipped branch is now forced
                return true;
            }
        }
        return false;
    }

    int pick_branch() {
        const CnfClause* best = nullptr;
        std::size_t best_open = SIZE_MAX;
        for (const auto& cl : clauses_) {
            std::size_t open = 0;
            bool sat = false;
            for (int lit : cl) {
                signed char v = value(lit);
                if (v > 0) { sat = true; break; }
                if (v == 0) ++open;
            }
            if (sat) continue;
            if (open < best_open) { best_open = open; best = &cl; }
        }
        if (!best) return 0;
        for (int lit : *best)
            if (value(lit) == 0) return lit;
        return 0;
    }
};

// =============================================================================
// Ordinal saturation
// =============================================================================

// Semantic axioms over ordinal atoms: ladder implications between thresholds
// of one variable (X>=10 -> X>=5), equality-vs-threshold links, conflicts,
// and per-atom domain facts. Nominal atoms only relate through complements,
// which the shared-atom encoding already provides.
inline std::vector<CnfClause> saturation_clauses(AtomTable& atoms, const Vocabulary& vocab) {
    std::vector<CnfClause> out;
    std::map<std::string, std::vector<int>> groups;  // per (subject, rhs shape)
    std::size_t n = atoms.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Predicate& a = atoms.at((int)i);
        if (vocab.at(a.subject).kind != VarKind::Ordinal) continue;
        std::string key = std::to_string(a.subject);
        if (a.linear) key += "~" + std::to_string(a.expr.var);
        groups[key].push_back((int)i);
    }

    std::set<CnfClause> dedup;
    auto emit = [&](CnfClause cl) {
        std::sort(cl.begin(), cl.end());
        cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
        if (dedup.insert(cl).second) out.push_back(cl);
    };

    for (const auto& [key, ids] : groups) {
        (void)key;
        for (int id : ids) {
            Literal pos{atoms.at(id), true}, neg{atoms.at(id), false};
            if (literal_always_true(pos, vocab)) emit({id + 1});
            if (literal_always_true(neg, vocab)) emit({-(id + 1)});
        }
        for (std::size_t i = 0; i < ids.size(); ++i) {
            for (std::size_t j = 0; j < ids.size(); ++j) {
                if (i == j) continue;
                const Predicate& a = atoms.at(ids[i]);
                const Predicate& b = atoms.at(ids[j]);
                for (bool sa : {true, false})
                    for (bool sb : {true, false}) {
                        if (literal_implies({a, sa}, {b, sb}, vocab))
                            emit({sa ? -(ids[i] + 1) : ids[i] + 1,
                                  sb ? ids[j] + 1 : -(ids[j] + 1)});
                    }
            }
        }
    }
    return out;
}

// =============================================================================
// Entailment
// =============================================================================

struct Countermodel {
    std::vector<std::pair<Predicate, bool>> atom_values;  // canonical atom -> truth

    std::string text(const Vocabulary& vocab) const {
        std::vector<std::string> parts;
        for (const auto& [atom, val] : atom_values)
            parts.push_back((val ? "" : "!") + predicate_text(atom, vocab));
        return join(parts, ", ");
    }
};

// Clauses of a query's negation: antecedent literals become units, an OR
// consequent contributes one negated unit per disjunct, an AND consequent one
// clause of negated literals.
inline std::vector<Clause> negated_query_clauses(const Constraint& q) {
    std::vector<Clause> out;
    for (const auto& p : q.antecedent) out.push_back(Clause{{to_literal(p)}});
    if (q.connective == Connective::Or) {
        for (const auto& p : q.consequent) {
            Literal l = to_literal(p);
            l.positive = !l.positive;
            out.push_back(Clause{{l}});
        }
    } else {
        Clause cl;
        for (const auto& p : q.consequent) {
            Literal l = to_literal(p);
            l.positive = !l.positive;
            cl.lits.push_back(l);
        }
        out.push_back(cl);
    }
    return out;
}

constexpr std::size_t kDefaultAtomBudget = 10000;

// Does the axiom clause set entail q over the declared domains? On failure
// fills the countermodel: an atom assignment satisfying the axioms (and the
// ordinal semantics) but falsifying q.
inline bool entails(const std::vector<Clause>& axioms, const Constraint& q,
                    const Vocabulary& vocab, Countermodel* counter = nullptr,
                    std::size_t atom_budget = kDefaultAtomBudget) {
    AtomTable atoms;
    std::vector<CnfClause> cnf;
    for (const auto& cl : axioms) cnf.push_back(encode_clause(cl, atoms));
    for (const auto& cl : negated_query_clauses(q)) cnf.push_back(encode_clause(cl, atoms));
    if (atoms.size() > atom_budget)
        fail(ErrorKind::QueryTooLarge,
             std::to_string(atoms.size()) + " atoms exceed the budget of " +
                 std::to_string(atom_budget));
    std::vector<CnfClause> sat = saturation_clauses(atoms, vocab);

    CnfSolver solver((int)atoms.size());
    for (auto& cl : cnf) solver.add(std::move(cl));
    for (auto& cl : sat) solver.add(std::move(cl));
    if (solver.solve()) {
        if (counter) {
            counter->atom_values.clear();
            for (std::size_t i = 0; i < atoms.size(); ++i)
                counter->atom_values.emplace_back(atoms.at((int)i),
                                                  solver.model()[i] >= 0);
        }
        return false;
    }
    return true;
}

inline std::vector<Clause> clauses_of(const std::vector<Constraint>& cs) {
    std::vector<Clause> out;
    for (const auto& c : cs) {
        ClauseSet s = clausify(c);
        out.insert(out.end(), s.clauses.begin(), s.clauses.end());
    }
    return out;
}

// =============================================================================
// The augmented partial order
// =============================================================================

enum class CompareResult { MoreSpecific, MoreGeneral, Equal, Incomparable };

// Orders candidates for traversal: smaller arity first (more succinct), then
// logical specificity between equal-arity constraints, decided by entailment
// on the two singletons.
inline CompareResult compare(const Constraint& c1, const Constraint& c2,
                             const Vocabulary& vocab) {
    int a1 = arity(c1), a2 = arity(c2);
    if (a1 != a2) return a1 < a2 ? CompareResult::MoreSpecific : CompareResult::MoreGeneral;
    bool fwd = entails(clauses_of({c1}), c2, vocab);
    bool bwd = entails(clauses_of({c2}), c1, vocab);
    if (fwd && bwd) return CompareResult::Equal;
    if (fwd) return CompareResult::MoreSpecific;
    if (bwd) return CompareResult::MoreGeneral;
    return CompareResult::Incomparable;
}

// Deterministic traversal order inside a layer: arity, then printed form.
inline bool traversal_less(const Constraint& c1, const Constraint& c2,
                           const Vocabulary& vocab) {
    int a1 = arity(c1), a2 = arity(c2);
    if (a1 != a2) return a1 < a2;
    return constraint_text(c1, vocab) < constraint_text(c2, vocab);
}

}  // namespace lawmine

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hitpaths/exec.hpp"

namespace hitpaths {

// ---------------------------------------------------------------------------
// Totally ordered regular signed CNF
//
// Variables x_1..x_n range over the truth value set [N] = {1..N}. A literal
// constrains one variable from above (x <= c) or below (x >= c).
// ---------------------------------------------------------------------------

enum class Sign { GE, LE };

struct SignedLiteral {
    int var = 1;    // 1-based
    Sign sign = Sign::GE;
    int bound = 1;  // in [1, N]

    bool holds(int value) const { return sign == Sign::GE ? value >= bound : value <= bound; }
    friend bool operator==(const SignedLiteral&, const SignedLiteral&) = default;
};

using SignedClause = std::vector<SignedLiteral>;

struct SignedFormula {
    int num_vars = 0;
    int num_values = 1;  // N
    std::vector<SignedClause> clauses;

    std::size_t max_width() const;
    friend bool operator==(const SignedFormula&, const SignedFormula&) = default;
};

// values[i - 1] is the value of x_i.
using SignedAssignment = std::vector<int>;

bool satisfies(const SignedFormula& f, const SignedAssignment& a);

// ---------------------------------------------------------------------------
// Classical CNF with clauses of width <= 2
// ---------------------------------------------------------------------------

struct BoolLit {
    int var = 0;  // 0-based
    bool positive = true;

    BoolLit operator~() const { return {var, !positive}; }
    friend bool operator==(const BoolLit&, const BoolLit&) = default;
};

struct BoolCnf {
    int num_vars = 0;
    std::vector<std::vector<BoolLit>> clauses;
};

bool satisfies(const BoolCnf& cnf, const std::vector<bool>& model);

// Boolean encoding of a signed 2-CNF. Boolean variable var_of(i, j) stands for
// [x_i >= j].
struct ClassicalEncoding {
    BoolCnf cnf;
    int num_signed_vars = 0;
    int num_values = 1;

    int var_of(int signed_var, int value) const { return (signed_var - 1) * num_values + (value - 1); }
    // x_i = max{ j : B_{i,j} }, or 1 when the model leaves all false.
    SignedAssignment decode(const std::vector<bool>& model) const;
};

// Throws ClauseTooWide when a clause has more than two literals.
ClassicalEncoding signed_to_classical(const SignedFormula& f);

// Implication graph + Tarjan SCC. Returns nullopt when unsatisfiable.
std::optional<std::vector<bool>> solve_2sat(const BoolCnf& cnf);

// Signed 2-SAT through the classical encoding. The model is checked against
// the formula before it is returned.
std::optional<SignedAssignment> solve_tors2sat(const SignedFormula& f);

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

// Exhaustive scan in lexicographic order (x_1 most significant); returns the
// first model. Throws CapExceeded when N^n > cap. Any clause width.
std::optional<SignedAssignment> enumerate_signed(const SignedFormula& f,
                                                 std::uint64_t cap = kDefaultEnumerationCap,
                                                 Exec exec = Exec::Serial);

// Drops clauses that contain x_i <= c1 and x_i >= c2 with c2 <= c1 + 1 and
// merges repeated same-sign literals on one variable into the weaker one.
// Satisfiability and models are unchanged.
SignedFormula simplify_trivial_clauses(const SignedFormula& f);

}  // namespace hitpaths

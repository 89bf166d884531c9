#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ocb/laurent.hpp"

namespace ocb {

// Symbolic description of a q-series. Nodes are immutable and may be shared,
// so a recipe is a DAG whose leaves are exact q-series constructors.
struct RecipeNode;
using Recipe = std::shared_ptr<const RecipeNode>;

struct RecipeNode {
  enum class Kind {
    Constant,        // value
    QPower,          // q^a
    EulerProduct,    // prod (1 - q^{a n})^b
    E4,
    Delta,
    KleinJ,
    PartitionSlice,  // sum p(a n + b) q^n
    Derivative,      // d/dq args[0]
    Sum,
    Difference,      // args[0] - args[1], or -args[0] with one argument
    Product,
    Quotient,
    Power,           // args[0]^a, a may be negative
  };

  Kind kind;
  Rational value;
  long a = 0;
  long b = 0;
  std::vector<Recipe> args;
};

namespace recipe {

Recipe constant(const Rational& c);
Recipe qpow(long k);
Recipe euler(long delta, long e);
Recipe e4();
Recipe delta();
Recipe klein_j();
Recipe partition_slice(long a, long b);
Recipe derivative(Recipe r);
Recipe sum(std::vector<Recipe> terms);
Recipe difference(Recipe a, Recipe b);
Recipe negate(Recipe a);
Recipe product(std::vector<Recipe> factors);
Recipe quotient(Recipe a, Recipe b);
Recipe power(Recipe r, long e);

}  // namespace recipe

// Text form (s-expressions):
//
//   file   = { "(" "let" name expr ")" } expr
//   expr   = rational | name | "(" op { expr | integer } ")"
//   op     = "q" k | "euler" delta e | "E4" | "Delta" | "J" | "pslice" a b
//          | "d/dq" expr | "+" expr+ | "-" expr [expr] | "*" expr+
//          | "/" expr expr | "^" expr integer
//
// ';' starts a comment that runs to the end of the line.
Recipe parse_recipe(std::string_view text);
Recipe load_recipe(const std::string& path);

// Canonical single-line s-expression (let-bindings are inlined).
std::string to_string(const Recipe& r);

// Exact expansion to O(q^trunc). Leaves are evaluated at a working precision
// that is raised until the tracked truncation of the result reaches trunc.
LaurentSeries evaluate_recipe(const Recipe& r, int trunc);

}  // namespace ocb

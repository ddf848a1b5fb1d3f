#pragma once

#include "lorentzlab/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lorentzlab {

// Exact point of P^2(Q), normalized so the first nonzero coordinate is 1.
struct ProjectivePoint {
  std::array<Rational, 3> x{};

  static ProjectivePoint of(const Rational& a, const Rational& b, const Rational& c);

  int zero_count() const;
  // -1, or i for the coordinate point e_i ([1:0:0], [0:1:0], [0:0:1]).
  int coordinate_index() const;
  bool is_generic() const { return zero_count() == 0; }  // off all coordinate lines

  bool operator==(const ProjectivePoint& o) const { return x == o.x; }
  bool operator<(const ProjectivePoint& o) const;
};

// Exceptional classes are indexed by exact points or by free symbolic names.
using PointLabel = std::variant<ProjectivePoint, std::string>;

bool operator<(const PointLabel& a, const PointLabel& b);
std::string label_to_string(const PointLabel& l);

// Class t u0 + sum_a lambda_a e_a in the inductive-limit intersection lattice:
// (u0, u0) = 1, (e_a, e_b) = -delta_ab, (u0, e_a) = 0; zero coefficients are
// pruned so support is canonical.
struct PMClass {
  Rational u0 = 0;
  std::map<PointLabel, Rational> exc;

  static PMClass hyperplane();               // u0
  static PMClass exceptional(PointLabel a);  // e_a

  PMClass& add(const PMClass& o, const Rational& scale = 1);
  bool operator==(const PMClass& o) const { return u0 == o.u0 && exc == o.exc; }
};

Rational intersect(const PMClass& a, const PMClass& b);
Rational self_intersection(const PMClass& a);

// Generators of the modeled Cremona words.
struct LinearGen {
  // Invertible 3x3 rational matrix acting on column coordinate vectors.
  std::array<std::array<Rational, 3>, 3> m;
};
struct SigmaGen {};  // standard quadratic involution [x:y:z] -> [yz:xz:xy]
struct MonomialGen {
  // (x, y) -> (x^a y^b, x^c y^d) on the torus; requires ad - bc != 0.
  std::int64_t a = 1, b = 0, c = 0, d = 1;
};
using CremonaGen = std::variant<LinearGen, SigmaGen, MonomialGen>;
using CremonaWord = std::vector<CremonaGen>;

ProjectivePoint apply_linear(const LinearGen& A, const ProjectivePoint& p);
// Defined only for generic points (all coordinates nonzero).
ProjectivePoint apply_sigma(const ProjectivePoint& p);

// Pushforward of the involution:
//   u0       -> 2 u0 - e_{p1} - e_{p2} - e_{p3}     (p_i the coordinate points)
//   e_{p_i}  -> u0 - e_{p_j} - e_{p_k}
//   e_x      -> e_{sigma(x)}                         (x generic)
// Support on a coordinate line away from the p_i, or symbolic, throws
// std::domain_error("non-generic support").
PMClass push_sigma(const PMClass& c);
PMClass push_linear(const LinearGen& A, const PMClass& c);
// Word semantics: [g1, ..., gk] is the composition g1 o ... o gk, so the
// rightmost generator is pushed first; push_word(w1 + w2, c) =
// push_word(w1, push_word(w2, c)) exactly.
PMClass push_word(const CremonaWord& w, const PMClass& c);

// Degree of the homogenized monomial map: lift the two components and 1 to
// Laurent monomials in [X:Y:Z] via x = X/Z, y = Y/Z, shift by the minimal
// common monomial making all exponents nonnegative, divide out the monomial
// gcd; the common total degree is the result.
std::int64_t monomial_degree(const MonomialGen& g);

// deg(f^n) = (f^n_* u0, u0) for n = 1..n_iter.  Words made entirely of
// monomial generators iterate by exact exponent-matrix powers; words without
// monomial generators iterate by class pushforward.  Mixed words, or a
// pushforward genericity failure, truncate the report and set `reason`.
struct DegreeReport {
  std::string word;
  std::vector<BigInt> degrees;
  double lambda_hat = 1.0;  // exp of the tail log-slope of the degree growth
  bool truncated = false;
  std::string reason;
};

DegreeReport degree_sequence(const CremonaWord& w, int n_iter);

// Growth verdict from a degree report: "elliptic" when the sequence is
// bounded, "hyperbolic" when it fits an exponential with rate clearly above 1,
// "parabolic-candidate" otherwise — unbounded subexponential growth cannot be
// certified parabolic from finitely many terms.
std::string classify_degree_growth(const DegreeReport& r);

// Permutation isometry of the span of e_0..e_{L-1} (negative definite):
// P e_a = e_{perm[a]}.
struct Permutation {
  std::vector<int> images;

  int order() const;  // lcm of cycle lengths
};

// Rational vector supported on e-labels 0..L-1.
using ELabelVec = std::map<int, Rational>;

// Order of the rotation induced on an invariant plane span{v1, v2}: the least
// n >= 1 with (P|plane)^n = id, computed exactly; divides perm.order(), and
// rationality of the plane forces it into {1, 2, 3, 4, 6}.  Throws
// std::domain_error if v1, v2 are dependent or the plane is not P-invariant.
struct RotationReport {
  int order = 1;
  bool is_reflection = false;   // det(P|plane) = -1
  int permutation_order = 1;
  std::array<Rational, 4> restricted;  // P|plane in basis (v1, v2), column-major
};

RotationReport rotation_order(const Permutation& perm, const ELabelVec& v1,
                              const ELabelVec& v2);

// Torus-fixed data of the k-fold iterated blow-up of all torus-fixed points,
// modeled by fan subdivision: P^2 starts with rays (1,0), (0,1), (-1,-1);
// each round inserts the sum of every adjacent ray pair.  Fixed points are
// the 2-cones (3 * 2^k), fixed classes are u0 plus all exceptionals
// (1 + 3(2^k - 1)).
struct ToricFixedData {
  std::int64_t fixed_points = 0;
  std::int64_t fixed_classes = 0;
  std::vector<std::array<std::int64_t, 2>> rays;
};

ToricFixedData toric_fixed_dimension(int k);

// Isometries displacing u0 by at most `dist` have degree at most
// floor(cosh(2 dist)) + 1.
std::int64_t degree_bound(double dist);

// Word text syntax:  "lin=1,0,0;0,2,0;0,0,1 | sigma | mono=2,1,1,1"
// (entries are exact rationals; '|' separates generators, listed left to
// right in composition order).  Returns nullopt with `error` set on bad text.
std::optional<CremonaWord> parse_word(const std::string& text, std::string* error = nullptr);
std::string word_to_string(const CremonaWord& w);

// Seeded generic linear map with small rational entries; the caller re-draws
// on a genericity failure (coordinate-line coincidence) downstream.
LinearGen random_linear(std::uint64_t seed);

// Word with m sigma factors interleaved with seeded generic linear maps,
// re-drawn (bounded attempts) until n_iter pushforward iterations run clean.
CremonaWord generic_sigma_word(int m, int n_iter, std::uint64_t seed);

}  // namespace lorentzlab

#include "lorentzlab/picard_manin.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace lorentzlab {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

Rational det3(const std::array<std::array<Rational, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

ProjectivePoint coordinate_point(int i) {
  return ProjectivePoint::of(i == 0 ? 1 : 0, i == 1 ? 1 : 0, i == 2 ? 1 : 0);
}

}  // namespace

ProjectivePoint ProjectivePoint::of(const Rational& a, const Rational& b, const Rational& c) {
  ProjectivePoint p;
  p.x = {a, b, c};
  for (auto& coord : p.x)
    if (coord != 0) {
      const Rational lead = coord;
      for (auto& e : p.x) e /= lead;
      return p;
    }
  throw std::invalid_argument("ProjectivePoint: all coordinates are zero");
}

int ProjectivePoint::zero_count() const {
  int z = 0;
  for (const auto& e : x)
    if (e == 0) ++z;
  return z;
}

int ProjectivePoint::coordinate_index() const {
  if (zero_count() != 2) return -1;
  for (int i = 0; i < 3; ++i)
    if (x[i] != 0) return i;
  return -1;
}

bool ProjectivePoint::operator<(const ProjectivePoint& o) const {
  for (int i = 0; i < 3; ++i) {
    if (x[i] < o.x[i]) return true;
    if (o.x[i] < x[i]) return false;
  }
  return false;
}

bool operator<(const PointLabel& a, const PointLabel& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (a.index() == 0) return std::get<0>(a) < std::get<0>(b);
  return std::get<1>(a) < std::get<1>(b);
}

std::string label_to_string(const PointLabel& l) {
  if (l.index() == 1) return std::get<1>(l);
  const auto& p = std::get<0>(l);
  std::string out = "[";
  for (int i = 0; i < 3; ++i) {
    out += to_string(p.x[i]);
    out += i < 2 ? ":" : "]";
  }
  return out;
}

PMClass PMClass::hyperplane() {
  PMClass c;
  c.u0 = 1;
  return c;
}

PMClass PMClass::exceptional(PointLabel a) {
  PMClass c;
  c.exc[std::move(a)] = 1;
  return c;
}

PMClass& PMClass::add(const PMClass& o, const Rational& scale) {
  u0 += scale * o.u0;
  for (const auto& [label, coeff] : o.exc) {
    Rational& slot = exc[label];
    slot += scale * coeff;
    if (slot == 0) exc.erase(label);
  }
  return *this;
}

Rational intersect(const PMClass& a, const PMClass& b) {
  Rational acc = a.u0 * b.u0;
  // Supports are sorted maps; walk them together.
  auto ia = a.exc.begin();
  auto ib = b.exc.begin();
  while (ia != a.exc.end() && ib != b.exc.end()) {
    if (ia->first < ib->first) ++ia;
    else if (ib->first < ia->first) ++ib;
    else {
      acc -= ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return acc;
}

Rational self_intersection(const PMClass& a) { return intersect(a, a); }

ProjectivePoint apply_linear(const LinearGen& A, const ProjectivePoint& p) {
  std::array<Rational, 3> y{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) y[i] += A.m[i][j] * p.x[j];
  return ProjectivePoint::of(y[0], y[1], y[2]);
}

ProjectivePoint apply_sigma(const ProjectivePoint& p) {
  if (!p.is_generic())
    throw std::domain_error("apply_sigma: point lies on a coordinate line");
  return ProjectivePoint::of(p.x[1] * p.x[2], p.x[0] * p.x[2], p.x[0] * p.x[1]);
}

PMClass push_sigma(const PMClass& c) {
  PMClass out;
  // sigma_* u0 = 2 u0 - e_{p1} - e_{p2} - e_{p3}.
  out.u0 = 2 * c.u0;
  for (int i = 0; i < 3; ++i)
    out.add(PMClass::exceptional(coordinate_point(i)), -c.u0);
  for (const auto& [label, coeff] : c.exc) {
    if (label.index() == 1)
      throw std::domain_error("non-generic support: symbolic label under sigma");
    const auto& p = std::get<0>(label);
    const int ci = p.coordinate_index();
    if (ci >= 0) {
      // sigma_* e_{p_i} = u0 - e_{p_j} - e_{p_k}.
      out.u0 += coeff;
      out.add(PMClass::exceptional(coordinate_point((ci + 1) % 3)), -coeff);
      out.add(PMClass::exceptional(coordinate_point((ci + 2) % 3)), -coeff);
    } else if (p.is_generic()) {
      out.add(PMClass::exceptional(apply_sigma(p)), coeff);
    } else {
      throw std::domain_error("non-generic support");
    }
  }
  return out;
}

PMClass push_linear(const LinearGen& A, const PMClass& c) {
  if (det3(A.m) == 0) throw std::invalid_argument("push_linear: singular matrix");
  PMClass out;
  out.u0 = c.u0;
  for (const auto& [label, coeff] : c.exc) {
    if (label.index() == 1)
      throw std::domain_error("non-generic support: symbolic label under a linear map");
    out.add(PMClass::exceptional(apply_linear(A, std::get<0>(label))), coeff);
  }
  return out;
}

PMClass push_word(const CremonaWord& w, const PMClass& c) {
  PMClass cur = c;
  // [g1, ..., gk] composes as g1 o ... o gk: rightmost acts first.
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (std::holds_alternative<SigmaGen>(*it)) cur = push_sigma(cur);
    else if (std::holds_alternative<LinearGen>(*it)) cur = push_linear(std::get<LinearGen>(*it), cur);
    else throw std::domain_error("push_word: monomial generators use symbolic homogenization");
  }
  return cur;
}

namespace {

// Lift (x, y) -> (x^a y^b, x^c y^d) to [X:Y:Z] by x = X/Z, y = Y/Z: the three
// components have Laurent exponent rows (a, b, -a-b), (c, d, -c-d), (0, 0, 0);
// shift by the minimal monomial clearing negatives, then strip the gcd monomial.
template <typename Int>
Int homogenized_degree(const Int& a, const Int& b, const Int& c, const Int& d) {
  std::array<std::array<Int, 3>, 3> rows = {{{a, b, Int(-a - b)}, {c, d, Int(-c - d)}, {Int(0), Int(0), Int(0)}}};
  for (int col = 0; col < 3; ++col) {
    Int shift = 0;
    for (int r = 0; r < 3; ++r) {
      const Int neg = Int(-rows[r][col]);
      if (neg > shift) shift = neg;
    }
    for (int r = 0; r < 3; ++r) rows[r][col] += shift;
  }
  for (int col = 0; col < 3; ++col) {
    Int mn = rows[0][col];
    if (rows[1][col] < mn) mn = rows[1][col];
    if (rows[2][col] < mn) mn = rows[2][col];
    for (int r = 0; r < 3; ++r) rows[r][col] -= mn;
  }
  return Int(rows[0][0] + rows[0][1] + rows[0][2]);
}

}  // namespace

std::int64_t monomial_degree(const MonomialGen& g) {
  if (g.a * g.d - g.b * g.c == 0)
    throw std::invalid_argument("monomial_degree: exponent matrix must be invertible");
  return homogenized_degree<std::int64_t>(g.a, g.b, g.c, g.d);
}

namespace {

double fit_growth_rate(const std::vector<BigInt>& degrees) {
  const int n = static_cast<int>(degrees.size());
  if (n == 0) return 1.0;
  if (n < 4) {
    const double last = degrees.back().convert_to<double>();
    return std::pow(std::max(last, 1.0), 1.0 / n);
  }
  // Least-squares slope of log(deg_k) against k over the tail half; a growth
  // rate is never below 1 (bounded sequences fit a flat or negative slope).
  const int lo = n / 2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int m = n - lo;
  for (int i = lo; i < n; ++i) {
    const double x = i + 1;
    const double y = std::log(degrees[i].convert_to<double>());
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double det = m * sxx - sx * sx;
  return std::max(1.0, std::exp((m * sxy - sx * sy) / det));
}

}  // namespace

DegreeReport degree_sequence(const CremonaWord& w, int n_iter) {
  if (n_iter < 1) throw std::invalid_argument("degree_sequence: n_iter must be >= 1");
  if (w.empty()) throw std::invalid_argument("degree_sequence: empty word");
  DegreeReport rep;
  rep.word = word_to_string(w);

  const bool any_mono = std::any_of(w.begin(), w.end(), [](const CremonaGen& g) {
    return std::holds_alternative<MonomialGen>(g);
  });
  const bool all_mono = std::all_of(w.begin(), w.end(), [](const CremonaGen& g) {
    return std::holds_alternative<MonomialGen>(g);
  });

  if (any_mono && !all_mono) {
    rep.truncated = true;
    rep.reason = "mixed monomial and pushforward generators are not comparable";
    return rep;
  }

  if (all_mono) {
    // Compose exponent matrices ([g1...gk] = g1 o ... o gk gives the product
    // M1 M2 ... Mk) and read each iterate's degree off the homogenization.
    std::array<BigInt, 4> word_m = {1, 0, 0, 1};
    for (const auto& gen : w) {
      const auto& g = std::get<MonomialGen>(gen);
      const std::array<BigInt, 4> rhs = {g.a, g.b, g.c, g.d};
      word_m = {word_m[0] * rhs[0] + word_m[1] * rhs[2], word_m[0] * rhs[1] + word_m[1] * rhs[3],
                word_m[2] * rhs[0] + word_m[3] * rhs[2], word_m[2] * rhs[1] + word_m[3] * rhs[3]};
    }
    if (word_m[0] * word_m[3] - word_m[1] * word_m[2] == 0) {
      rep.truncated = true;
      rep.reason = "exponent matrix is singular";
      return rep;
    }
    std::array<BigInt, 4> acc = {1, 0, 0, 1};
    for (int n = 1; n <= n_iter; ++n) {
      acc = {acc[0] * word_m[0] + acc[1] * word_m[2], acc[0] * word_m[1] + acc[1] * word_m[3],
             acc[2] * word_m[0] + acc[3] * word_m[2], acc[2] * word_m[1] + acc[3] * word_m[3]};
      rep.degrees.push_back(homogenized_degree<BigInt>(acc[0], acc[1], acc[2], acc[3]));
    }
    rep.lambda_hat = fit_growth_rate(rep.degrees);
    return rep;
  }

  PMClass c = PMClass::hyperplane();
  for (int n = 1; n <= n_iter; ++n) {
    try {
      c = push_word(w, c);
    } catch (const std::domain_error& err) {
      rep.truncated = true;
      rep.reason = err.what();
      break;
    }
    const Rational deg = intersect(c, PMClass::hyperplane());
    if (denominator(deg) != 1) {
      rep.truncated = true;
      rep.reason = "non-integral degree";
      break;
    }
    rep.degrees.push_back(numerator(deg));
  }
  rep.lambda_hat = fit_growth_rate(rep.degrees);
  return rep;
}

std::string classify_degree_growth(const DegreeReport& r) {
  const auto& d = r.degrees;
  const int n = static_cast<int>(d.size());
  if (n == 0) return "elliptic";
  BigInt max1 = 0, max2 = 0;
  for (int i = 0; i < n; ++i) {
    BigInt& slot = (i < n / 2) ? max1 : max2;
    if (d[i] > slot) slot = d[i];
  }
  if (n < 6 || max2 <= max1) return "elliptic";

  // Tail-half least squares of log(deg_k) against k (exponential model) and
  // against log k (polynomial model); the better residual decides.
  const int lo = n / 2, m = n - lo;
  auto fit_residual = [&](bool use_log_x) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = lo; i < n; ++i) {
      const double x = use_log_x ? std::log(double(i + 1)) : double(i + 1);
      const double y = std::log(d[i].convert_to<double>());
      sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double det = m * sxx - sx * sx;
    const double slope = (m * sxy - sx * sy) / det;
    const double icept = (sy - slope * sx) / m;
    double acc = 0;
    for (int i = lo; i < n; ++i) {
      const double x = use_log_x ? std::log(double(i + 1)) : double(i + 1);
      const double y = std::log(d[i].convert_to<double>());
      const double e = y - (icept + slope * x);
      acc += e * e;
    }
    return std::sqrt(acc / m);
  };
  if (r.lambda_hat > 1.05 && fit_residual(false) <= fit_residual(true)) return "hyperbolic";
  return "parabolic-candidate";
}

int Permutation::order() const {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(n, false);
  std::int64_t ord = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = images[j];
      ++len;
    }
    ord = std::lcm<std::int64_t>(ord, len);
  }
  return static_cast<int>(ord);
}

RotationReport rotation_order(const Permutation& perm, const ELabelVec& v1, const ELabelVec& v2) {
  const int L = static_cast<int>(perm.images.size());
  {
    std::vector<bool> hit(L, false);
    for (int img : perm.images) {
      if (img < 0 || img >= L || hit[img])
        throw std::invalid_argument("rotation_order: not a permutation");
      hit[img] = true;
    }
  }
  auto check_support = [&](const ELabelVec& v) {
    if (v.empty()) throw std::invalid_argument("rotation_order: zero plane vector");
    for (const auto& [a, coeff] : v) {
      if (a < 0 || a >= L) throw std::invalid_argument("rotation_order: label outside the permuted set");
      (void)coeff;
    }
  };
  check_support(v1);
  check_support(v2);

  auto apply_perm = [&](const ELabelVec& v) {
    ELabelVec out;
    for (const auto& [a, coeff] : v)
      if (coeff != 0) out[perm.images[a]] = coeff;
    return out;
  };
  auto coeff_of = [](const ELabelVec& v, int a) {
    const auto it = v.find(a);
    return it == v.end() ? Rational(0) : it->second;
  };

  // Solve P v = x * v1 + y * v2 exactly: pick an invertible 2x2 row pair,
  // Cramer, then verify every coordinate (failure = plane not invariant).
  std::vector<int> labels;
  for (const auto& [a, coeff] : v1) if (coeff != 0) labels.push_back(a);
  for (const auto& [a, coeff] : v2) if (coeff != 0 && !std::count(labels.begin(), labels.end(), a)) labels.push_back(a);
  for (size_t idx = 0; idx < labels.size(); ++idx) {
    const int im = perm.images[labels[idx]];
    if (!std::count(labels.begin(), labels.end(), im)) labels.push_back(im);
  }

  int ra = -1, rb = -1;
  Rational det;
  for (size_t i = 0; i < labels.size() && ra < 0; ++i)
    for (size_t j = i + 1; j < labels.size(); ++j) {
      det = coeff_of(v1, labels[i]) * coeff_of(v2, labels[j]) -
            coeff_of(v1, labels[j]) * coeff_of(v2, labels[i]);
      if (det != 0) {
        ra = labels[i];
        rb = labels[j];
        break;
      }
    }
  if (ra < 0) throw std::domain_error("rotation_order: plane vectors are linearly dependent");

  auto solve_in_plane = [&](const ELabelVec& target) {
    const Rational t1 = coeff_of(target, ra), t2 = coeff_of(target, rb);
    const Rational x = (t1 * coeff_of(v2, rb) - t2 * coeff_of(v2, ra)) / det;
    const Rational y = (coeff_of(v1, ra) * t2 - coeff_of(v1, rb) * t1) / det;
    for (int a : labels) {
      if (coeff_of(target, a) != x * coeff_of(v1, a) + y * coeff_of(v2, a))
        throw std::domain_error("rotation_order: plane is not invariant");
    }
    return std::pair<Rational, Rational>(x, y);
  };

  const auto [x11, x21] = solve_in_plane(apply_perm(v1));
  const auto [x12, x22] = solve_in_plane(apply_perm(v2));

  RotationReport rep;
  rep.permutation_order = perm.order();
  rep.restricted = {x11, x21, x12, x22};
  rep.is_reflection = (x11 * x22 - x21 * x12) == -1;

  // Power the restricted matrix exactly until it is the identity; the global
  // permutation order is a guaranteed upper bound.
  std::array<Rational, 4> r = {1, 0, 0, 1};
  for (int k = 1; k <= rep.permutation_order; ++k) {
    r = {x11 * r[0] + x12 * r[1], x21 * r[0] + x22 * r[1],
         x11 * r[2] + x12 * r[3], x21 * r[2] + x22 * r[3]};
    if (r[0] == 1 && r[1] == 0 && r[2] == 0 && r[3] == 1) {
      rep.order = k;
      return rep;
    }
  }
  throw std::logic_error("rotation_order: restriction did not close at the permutation order");
}

ToricFixedData toric_fixed_dimension(int k) {
  if (k < 0 || k > 25) throw std::invalid_argument("toric_fixed_dimension: k out of range [0, 25]");
  ToricFixedData out;
  out.rays = {{1, 0}, {0, 1}, {-1, -1}};
  std::int64_t exceptional = 0;
  for (int round = 0; round < k; ++round) {
    std::vector<std::array<std::int64_t, 2>> next;
    const size_t n = out.rays.size();
    next.reserve(2 * n);
    for (size_t i = 0; i < n; ++i) {
      const auto& a = out.rays[i];
      const auto& b = out.rays[(i + 1) % n];
      next.push_back(a);
      next.push_back({a[0] + b[0], a[1] + b[1]});  // blow-up of the cone (a, b)
    }
    exceptional += static_cast<std::int64_t>(n);
    out.rays = std::move(next);
  }
  out.fixed_points = static_cast<std::int64_t>(out.rays.size());
  out.fixed_classes = 1 + exceptional;
  return out;
}

std::int64_t degree_bound(double dist) {
  if (!(dist >= 0.0)) throw std::invalid_argument("degree_bound: distance must be >= 0");
  if (dist > 21.0) throw std::out_of_range("degree_bound: bound exceeds 64-bit range");
  return static_cast<std::int64_t>(std::floor(std::cosh(2.0 * dist))) + 1;
}

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::optional<CremonaWord> parse_word(const std::string& text, std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = msg;
    return std::nullopt;
  };
  CremonaWord word;
  for (const std::string& raw : split(text, '|')) {
    const std::string tok = trim(raw);
    if (tok.empty()) return fail("empty generator token");
    if (tok == "sigma") {
      word.emplace_back(SigmaGen{});
      continue;
    }
    if (tok.rfind("lin=", 0) == 0) {
      const auto rows = split(tok.substr(4), ';');
      if (rows.size() != 3) return fail("lin= needs 3 rows separated by ';'");
      LinearGen g;
      for (int i = 0; i < 3; ++i) {
        const auto cols = split(rows[i], ',');
        if (cols.size() != 3) return fail("lin= rows need 3 entries separated by ','");
        for (int j = 0; j < 3; ++j) {
          const auto v = parse_rational(trim(cols[j]));
          if (!v) return fail("bad rational entry '" + trim(cols[j]) + "'");
          g.m[i][j] = *v;
        }
      }
      if (det3(g.m) == 0) return fail("lin= matrix is singular");
      word.emplace_back(std::move(g));
      continue;
    }
    if (tok.rfind("mono=", 0) == 0) {
      const auto cols = split(tok.substr(5), ',');
      if (cols.size() != 4) return fail("mono= needs 4 integer exponents");
      MonomialGen g;
      std::int64_t* slots[4] = {&g.a, &g.b, &g.c, &g.d};
      for (int i = 0; i < 4; ++i) {
        try {
          size_t used = 0;
          const std::string entry = trim(cols[i]);
          *slots[i] = std::stoll(entry, &used);
          if (used != entry.size()) return fail("bad integer exponent '" + entry + "'");
        } catch (const std::exception&) {
          return fail("bad integer exponent '" + trim(cols[i]) + "'");
        }
      }
      if (g.a * g.d - g.b * g.c == 0) return fail("mono= exponent matrix is singular");
      word.emplace_back(g);
      continue;
    }
    return fail("unknown generator '" + tok + "'");
  }
  if (word.empty()) return fail("empty word");
  return word;
}

std::string word_to_string(const CremonaWord& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += " | ";
    if (std::holds_alternative<SigmaGen>(w[i])) {
      out += "sigma";
    } else if (std::holds_alternative<LinearGen>(w[i])) {
      const auto& g = std::get<LinearGen>(w[i]);
      out += "lin=";
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
          out += to_string(g.m[r][c]);
          if (c < 2) out += ",";
        }
        if (r < 2) out += ";";
      }
    } else {
      const auto& g = std::get<MonomialGen>(w[i]);
      std::ostringstream os;
      os << "mono=" << g.a << "," << g.b << "," << g.c << "," << g.d;
      out += os.str();
    }
  }
  return out;
}

LinearGen random_linear(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 3);
  LinearGen g;
  do {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g.m[i][j] = Rational(num(rng), den(rng));
  } while (det3(g.m) == 0);
  return g;
}

CremonaWord generic_sigma_word(int m, int n_iter, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("generic_sigma_word: need at least one sigma");
  for (std::uint64_t attempt = 0; attempt < 200; ++attempt) {
    CremonaWord w;
    for (int i = 0; i < m; ++i) {
      if (i) w.emplace_back(random_linear(seed * 1000003 + attempt * 131 + i));
      w.emplace_back(SigmaGen{});
    }
    try {
      PMClass c = PMClass::hyperplane();
      for (int n = 0; n < n_iter; ++n) c = push_word(w, c);
      return w;
    } catch (const std::domain_error&) {
      continue;  // coordinate-line coincidence: re-draw the linear maps
    }
  }
  throw std::runtime_error("generic_sigma_word: no generic draw found");
}

}  // namespace lorentzlab

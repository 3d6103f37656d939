#include "infcov/arrangements.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace infcov {

namespace {

std::int64_t gcd_all(const std::vector<std::int64_t>& v) {
  std::int64_t g = 0;
  for (auto x : v)
    g = std::gcd(g, x);
  return g;
}

std::size_t arity(Ambient a) { return a == Ambient::P1 ? 2 : 3; }

std::vector<FieldElem> normalize_point(const Field& f, std::vector<FieldElem> v) {
  for (const auto& c : v)
    if (!f.is_zero(c)) {
      const FieldElem s = f.inv(c);
      for (auto& x : v)
        x = f.mul(x, s);
      return v;
    }
  return v;
}

bool on_line(const Field& f, const std::vector<FieldElem>& line, const std::vector<FieldElem>& pt) {
  FieldElem acc = f.zero();
  for (std::size_t k = 0; k < line.size(); ++k)
    acc = f.add(acc, f.mul(line[k], pt[k]));
  return f.is_zero(acc);
}

bool all_zero(const Field& f, const std::vector<FieldElem>& v) {
  return std::all_of(v.begin(), v.end(), [&](const FieldElem& x) { return f.is_zero(x); });
}

// Cross product in P2; the single 2x2 determinant in P1. Zero iff a and b
// are proportional.
std::vector<FieldElem> cross(const Field& f, const std::vector<FieldElem>& a, const std::vector<FieldElem>& b) {
  auto det = [&](std::size_t i, std::size_t j) { return f.sub(f.mul(a[i], b[j]), f.mul(a[j], b[i])); };
  if (a.size() == 2)
    return {det(0, 1)};
  return {det(1, 2), det(2, 0), det(0, 1)};
}

} // namespace

void LineArrangement::validate() const {
  if (!field)
    fail(ErrorKind::InvalidInput, "arrangement has no coefficient field");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].size() != arity(ambient))
      fail(ErrorKind::InvalidInput, "line " + std::to_string(i) + " has " + std::to_string(lines[i].size()) +
                                        " coordinates, expected " + std::to_string(arity(ambient)));
    if (all_zero(*field, lines[i]))
      fail(ErrorKind::InvalidInput, "line " + std::to_string(i) + " is the zero vector");
  }
  if (infinity) {
    if (ambient == Ambient::P1)
      fail(ErrorKind::InvalidInput, "a line at infinity only makes sense in P2");
    if (*infinity >= lines.size())
      fail(ErrorKind::InvalidInput, "infinity index " + std::to_string(*infinity) + " is out of range");
  }
}

LineArrangement LineArrangement::from_integers(Ambient ambient, const std::vector<std::vector<std::int64_t>>& normals,
                                               std::optional<std::size_t> infinity) {
  LineArrangement arr;
  arr.ambient = ambient;
  arr.field = rationals();
  arr.infinity = infinity;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (normals[i].size() != arity(ambient))
      fail(ErrorKind::InvalidInput, "line " + std::to_string(i) + " needs " + std::to_string(arity(ambient)) +
                                        " coordinates");
    if (gcd_all(normals[i]) != 1)
      fail(ErrorKind::InvalidInput, "line " + std::to_string(i) + " is not a primitive integer vector");
    std::vector<FieldElem> row;
    for (auto c : normals[i])
      row.push_back(arr.field->from_int(BigInt(static_cast<long>(c))));
    arr.lines.push_back(std::move(row));
  }
  arr.validate();
  return arr;
}

IntersectionData intersection_points(const LineArrangement& arr) {
  arr.validate();
  const std::size_t d = arr.size();
  if (d < 2)
    fail(ErrorKind::InvalidInput, "need at least two lines");
  const Field& f = *arr.field;
  IntersectionData out;
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  out.point_of.assign(d, std::vector<std::size_t>(d, unset));

  // Checked for every pair up front: a repeated line would otherwise hide
  // behind a point already found through a third line.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (all_zero(f, cross(f, arr.lines[i], arr.lines[j])))
        fail(ErrorKind::DegenerateInput, "lines " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

  if (arr.ambient == Ambient::P1) {
    IntersectionPoint origin;
    origin.lines.resize(d);
    std::iota(origin.lines.begin(), origin.lines.end(), 0);
    out.points.push_back(std::move(origin));
    for (auto& row : out.point_of)
      std::fill(row.begin(), row.end(), 0);
    return out;
  }

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      if (out.point_of[i][j] != unset)
        continue;
      IntersectionPoint pt;
      pt.coords = normalize_point(f, cross(f, arr.lines[i], arr.lines[j]));
      for (std::size_t k = 0; k < d; ++k)
        if (on_line(f, arr.lines[k], pt.coords))
          pt.lines.push_back(k);
      const std::size_t idx = out.points.size();
      for (auto u : pt.lines)
        for (auto v : pt.lines)
          if (u != v) {
            if (out.point_of[u][v] != unset)
              fail(ErrorKind::InvariantBreach, "two lines meet in more than one point");
            out.point_of[u][v] = idx;
          }
      out.points.push_back(std::move(pt));
    }
  return out;
}

AomotoComplexZ aomoto_complex(const LineArrangement& arr, const std::vector<std::int64_t>& nu) {
  return aomoto_complex(arr, intersection_points(arr), nu);
}

AomotoComplexZ aomoto_complex(const LineArrangement& arr, const IntersectionData& inter,
                              const std::vector<std::int64_t>& nu) {
  AomotoComplexZ cx;
  std::vector<std::size_t> h1_index(arr.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < arr.size(); ++i)
    if (!arr.infinity || *arr.infinity != i) {
      h1_index[i] = cx.h1_lines.size();
      cx.h1_lines.push_back(i);
    }
  if (nu.size() != cx.h1_lines.size())
    fail(ErrorKind::InvalidInput, "nu has " + std::to_string(nu.size()) + " entries but H^1 has rank " +
                                      std::to_string(cx.h1_lines.size()));
  if (gcd_all(nu) != 1)
    fail(ErrorKind::NotEpimorphism, "nu is not an epimorphism (gcd of its entries is not 1)");
  cx.nu = nu;

  std::size_t h2_rank = 0;
  for (std::size_t x = 0; x < inter.points.size(); ++x) {
    const auto& ls = inter.points[x].lines;
    if (arr.infinity && std::binary_search(ls.begin(), ls.end(), *arr.infinity))
      continue;
    cx.h2_points.push_back(x);
    h2_rank += ls.size() - 1;
  }

  const std::size_t b1 = cx.h1_lines.size();
  cx.d0 = IntMatrix(1, b1, BigInt(0));
  for (std::size_t l = 0; l < b1; ++l)
    cx.d0(0, l) = static_cast<long>(nu[l]);

  // Local pencil basis a_{i1 il}, l = 2..m, per point.
  cx.d1 = IntMatrix(b1, h2_rank, BigInt(0));
  std::size_t col0 = 0;
  for (auto x : cx.h2_points) {
    const auto& ls = inter.points[x].lines;
    const std::size_t m = ls.size();
    std::vector<std::int64_t> n(m);
    std::int64_t total = 0;
    for (std::size_t k = 0; k < m; ++k) {
      n[k] = nu[h1_index[ls[k]]];
      total += n[k];
    }
    for (std::size_t r = 0; r < m; ++r) {
      const std::size_t row = h1_index[ls[r]];
      for (std::size_t k = 1; k < m; ++k) {
        const std::size_t col = col0 + k - 1;
        cx.d1(row, col) = static_cast<long>(r != 0 && r == k ? -(total - n[k]) : n[k]);
      }
    }
    col0 += m - 1;
  }
  return cx;
}

AomotoNumbers beta_tau(const AomotoComplexZ& cx, const std::vector<std::int64_t>& characteristics) {
  AomotoNumbers out;
  const auto b1 = static_cast<std::int64_t>(cx.h1_lines.size());
  const SnfResult s0 = snf_int(cx.d0);
  const SnfResult s1 = cx.d1.cols() == 0 ? SnfResult{} : snf_int(cx.d1);
  for (auto p : characteristics) {
    if (p != 0 && !is_prime(p))
      fail(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
    const auto r0 = static_cast<std::int64_t>(p == 0 ? s0.rank : rank_mod_p(cx.d0, p));
    const auto r1 = static_cast<std::int64_t>(p == 0 ? s1.rank : cx.d1.cols() == 0 ? 0 : rank_mod_p(cx.d1, p));
    out.beta0[p] = 1 - r0;
    out.beta1[p] = b1 - r0 - r1;
  }
  for (const auto& dv : s1.divisors)
    if (dv > 1) {
      out.torsion.push_back(dv);
      out.tau1 *= dv;
    }
  return out;
}

EquivariantComplex pencil_complex(std::size_t d, const std::vector<std::int64_t>& n) {
  if (d < 2)
    fail(ErrorKind::InvalidInput, "a pencil needs d >= 2 lines");
  if (n.size() != d)
    fail(ErrorKind::InvalidInput, "expected " + std::to_string(d) + " weights, got " + std::to_string(n.size()));
  if (gcd_all(n) != 1)
    fail(ErrorKind::NotEpimorphism, "weights are not an epimorphism (gcd is not 1)");
  const std::int64_t total = std::accumulate(n.begin(), n.end(), std::int64_t{0});
  EquivariantComplex cx;
  cx.ranks = {1, static_cast<std::int64_t>(d), static_cast<std::int64_t>(d) - 1};
  LaurentMatrixZ d1(1, d, LaurentPolyZ{});
  d1(0, 0) = LaurentPolyZ::t_pow_minus_one(total);
  for (std::size_t l = 1; l < d; ++l)
    d1(0, l) = LaurentPolyZ::t_pow_minus_one(n[l - 1]);
  LaurentMatrixZ d2(d, d - 1, LaurentPolyZ{});
  for (std::size_t l = 0; l + 1 < d; ++l) {
    d2(0, l) = -LaurentPolyZ::t_pow_minus_one(n[l]);
    d2(l + 1, l) = LaurentPolyZ::t_pow_minus_one(total);
  }
  cx.boundaries = {std::move(d1), std::move(d2)};
  cx.validate(ErrorKind::InvariantBreach);
  return cx;
}

MultinetCheck verify_multinet(const Multinet& mn) {
  const auto& arr = mn.arrangement;
  arr.validate();
  if (arr.ambient != Ambient::P2)
    fail(ErrorKind::InvalidInput, "multinets live on arrangements in P2");
  const std::size_t d = arr.size();
  if (mn.k() < 3)
    fail(ErrorKind::InvalidInput, "a multinet needs at least 3 classes");
  if (mn.weights.size() != d)
    fail(ErrorKind::InvalidInput, "expected one weight per line");
  std::vector<int> cls(d, -1);
  for (std::size_t c = 0; c < mn.k(); ++c)
    for (auto h : mn.classes[c]) {
      if (h >= d)
        fail(ErrorKind::InvalidInput, "class member " + std::to_string(h) + " is out of range");
      if (cls[h] != -1)
        fail(ErrorKind::InvalidInput, "line " + std::to_string(h) + " appears in two classes");
      cls[h] = static_cast<int>(c);
    }
  if (std::find(cls.begin(), cls.end(), -1) != cls.end())
    fail(ErrorKind::InvalidInput, "the classes do not cover every line");
  for (auto w : mn.weights)
    if (w < 1)
      fail(ErrorKind::InvalidInput, "multiplicities must be positive");

  const IntersectionData inter = intersection_points(arr);
  std::vector<bool> in_x(inter.points.size(), false);
  for (auto x : mn.base_locus) {
    if (x >= inter.points.size())
      fail(ErrorKind::InvalidInput, "base-locus point " + std::to_string(x) + " is out of range");
    in_x[x] = true;
  }

  MultinetCheck out;
  auto flag = [&](char c) {
    if (std::find(out.violated.begin(), out.violated.end(), c) == out.violated.end())
      out.violated.push_back(c);
  };

  // (a)
  std::vector<std::int64_t> class_weight(mn.k(), 0);
  for (std::size_t h = 0; h < d; ++h)
    class_weight[static_cast<std::size_t>(cls[h])] += mn.weights[h];
  out.kappa = class_weight[0];
  if (std::any_of(class_weight.begin(), class_weight.end(), [&](auto w) { return w != out.kappa; }))
    flag('a');
  // (b)
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (cls[i] != cls[j] && !in_x[inter.meet(i, j)])
        flag('b');
  // (c)
  for (auto x : mn.base_locus) {
    std::vector<std::int64_t> local(mn.k(), 0);
    for (auto h : inter.points[x].lines)
      local[static_cast<std::size_t>(cls[h])] += mn.weights[h];
    if (std::any_of(local.begin(), local.end(), [&](auto w) { return w != local[0]; }))
      flag('c');
  }
  // (d): class members joined at points outside the base locus
  for (const auto& members : mn.classes) {
    if (members.empty()) {
      flag('d');
      continue;
    }
    std::set<std::size_t> seen{members[0]};
    std::vector<std::size_t> stack{members[0]};
    while (!stack.empty()) {
      const auto h = stack.back();
      stack.pop_back();
      for (auto g : members)
        if (!seen.count(g) && !in_x[inter.meet(h, g)]) {
          seen.insert(g);
          stack.push_back(g);
        }
    }
    if (seen.size() != members.size())
      flag('d');
  }
  // (e)
  if (gcd_all(mn.weights) != 1)
    flag('e');
  std::sort(out.violated.begin(), out.violated.end());
  out.valid = out.violated.empty();
  return out;
}

namespace {

// Deletion procedure on (third class, base locus). Greedy order first, then
// backtracking; failed states are memoized.
bool run_deletion(const std::vector<std::size_t>& lines, const std::vector<std::size_t>& points,
                  const IntersectionData& inter, std::vector<bool>& line_alive, std::vector<bool>& point_alive,
                  std::set<std::pair<std::vector<bool>, std::vector<bool>>>& dead, std::vector<std::size_t>& order) {
  if (std::none_of(line_alive.begin(), line_alive.end(), [](bool b) { return b; }))
    return true;
  if (dead.count({line_alive, point_alive}))
    return false;
  for (std::size_t pi = 0; pi < points.size(); ++pi) {
    if (!point_alive[pi])
      continue;
    const auto& incident = inter.points[points[pi]].lines;
    std::optional<std::size_t> only;
    int count = 0;
    for (std::size_t li = 0; li < lines.size(); ++li)
      if (line_alive[li] && std::binary_search(incident.begin(), incident.end(), lines[li])) {
        ++count;
        only = li;
      }
    if (count != 1)
      continue;
    line_alive[*only] = false;
    point_alive[pi] = false;
    order.push_back(lines[*only]);
    if (run_deletion(lines, points, inter, line_alive, point_alive, dead, order))
      return true;
    order.pop_back();
    line_alive[*only] = true;
    point_alive[pi] = true;
  }
  dead.insert({line_alive, point_alive});
  return false;
}

} // namespace

CertificateResult check_assumption_and_certificate(const Multinet& mn) {
  if (mn.k() != 3)
    fail(ErrorKind::NotAThreeNet, "the certificate needs exactly 3 classes, got " + std::to_string(mn.k()));
  const MultinetCheck chk = verify_multinet(mn);
  if (!chk.valid)
    fail(ErrorKind::InvalidInput, "not a valid multinet");
  const IntersectionData inter = intersection_points(mn.arrangement);
  std::vector<bool> in_x(inter.points.size(), false);
  for (auto x : mn.base_locus)
    in_x[x] = true;

  CertificateResult out;
  // (a)
  for (std::size_t c = 0; c < 2 && !out.failed_condition; ++c)
    for (auto h : mn.classes[c])
      if (mn.weights[h] != 1)
        out.failed_condition = 'a';
  // (b)
  for (std::size_t c = 0; c < 2 && !out.failed_condition; ++c)
    for (auto h : mn.classes[c])
      for (auto g : mn.classes[c])
        if (h < g && !in_x[inter.meet(h, g)] && inter.points[inter.meet(h, g)].multiplicity() > 2)
          out.failed_condition = 'b';
  // (c)
  if (!out.failed_condition) {
    const auto& a3 = mn.classes[2];
    std::vector<bool> line_alive(a3.size(), true), point_alive(mn.base_locus.size(), true);
    std::set<std::pair<std::vector<bool>, std::vector<bool>>> dead;
    if (!run_deletion(a3, mn.base_locus, inter, line_alive, point_alive, dead, out.deletion_order)) {
      out.failed_condition = 'c';
      out.deletion_order.clear();
    }
  }
  out.assumption_ok = !out.failed_condition;

  out.nu.assign(mn.arrangement.size(), 1);
  for (auto h : mn.classes[2])
    out.nu[h] = -2 * mn.weights[h];
  LineArrangement central = mn.arrangement;
  central.infinity.reset();
  out.tau1 = beta_tau(aomoto_complex(central, inter, out.nu), {}).tau1;
  out.no_parallel_component = out.assumption_ok && out.tau1 == 1;
  return out;
}

namespace {

std::vector<FieldElem> line3(const FieldElem& a, const FieldElem& b, const FieldElem& c) {
  return {a, b, c};
}

// x - z^j y, x - z^j z, y - z^j z for j = 0..m-1, appended in that order.
void append_ceva_lines(LineArrangement& arr, std::int64_t m) {
  const Field& f = *arr.field;
  const FieldElem zeta = root_of_unity(f, m);
  const FieldElem one = f.one(), zero = f.zero();
  for (int block = 0; block < 3; ++block)
    for (std::int64_t j = 0; j < m; ++j) {
      const FieldElem c = f.neg(f.pow(zeta, j));
      if (block == 0)
        arr.lines.push_back(line3(one, c, zero));
      else if (block == 1)
        arr.lines.push_back(line3(one, zero, c));
      else
        arr.lines.push_back(line3(zero, one, c));
    }
}

} // namespace

DeletedMonomial deleted_monomial_arrangement(std::int64_t mu) {
  if (mu < 2)
    fail(ErrorKind::InvalidInput, "mu must be at least 2");
  DeletedMonomial out;
  auto& arr = out.arrangement;
  arr.ambient = Ambient::P2;
  arr.field = make_splitting_field(0, mu);
  const Field& f = *arr.field;
  arr.lines.push_back(line3(f.zero(), f.one(), f.zero()));
  arr.lines.push_back(line3(f.zero(), f.zero(), f.one()));
  append_ceva_lines(arr, mu);
  arr.validate();
  out.orbifold_type = OrbifoldData{0, 2, {mu}};
  return out;
}

LineArrangement ceva_arrangement(std::int64_t m) {
  if (m < 1)
    fail(ErrorKind::InvalidInput, "m must be positive");
  LineArrangement arr;
  arr.ambient = Ambient::P2;
  arr.field = make_splitting_field(0, m);
  append_ceva_lines(arr, m);
  arr.validate();
  return arr;
}

std::vector<std::size_t> mixed_points(const LineArrangement& arr, const std::vector<std::vector<std::size_t>>& classes) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of(arr.size(), none);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto h : classes[c]) {
      if (h >= arr.size())
        fail(ErrorKind::InvalidInput, "class member " + std::to_string(h) + " is not a line index");
      class_of[h] = c;
    }
  const IntersectionData inter = intersection_points(arr);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < inter.points.size(); ++x) {
    std::set<std::size_t> touched;
    for (auto h : inter.points[x].lines)
      if (class_of[h] != none)
        touched.insert(class_of[h]);
    if (touched.size() >= 2)
      out.push_back(x);
  }
  return out;
}

Multinet ceva_multinet(std::int64_t m) {
  Multinet mn;
  mn.arrangement = ceva_arrangement(m);
  const auto mm = static_cast<std::size_t>(m);
  mn.classes.resize(3);
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t j = 0; j < mm; ++j)
      mn.classes[c].push_back(c * mm + j);
  mn.weights.assign(3 * mm, 1);
  mn.base_locus = mixed_points(mn.arrangement, mn.classes);
  return mn;
}

LineArrangement deleted_b3_arrangement() {
  return LineArrangement::from_integers(Ambient::P2,
                                        {{0, 0, 1},
                                         {1, 0, 0},
                                         {0, 1, 0},
                                         {1, -1, 0},
                                         {1, 0, -1},
                                         {0, 1, -1},
                                         {1, -1, -1},
                                         {1, -1, 1}},
                                        0);
}

MultiplicityVector lift_multiplicity(const std::vector<std::int64_t>& chi, std::int64_t n, std::int64_t p) {
  if (n < 1)
    fail(ErrorKind::InvalidInput, "N must be positive");
  if (!is_prime(p))
    fail(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
  if (chi.empty())
    fail(ErrorKind::InvalidInput, "need at least one residue");
  std::int64_t sum = 0;
  for (auto c : chi)
    sum += c;
  if (sum % n != 0)
    fail(ErrorKind::InvalidInput, "N = " + std::to_string(n) + " does not divide the residue sum " +
                                      std::to_string(sum));
  MultiplicityVector out;
  for (auto c : chi) {
    const std::int64_t r = ((c % n) + n) % n;
    out.m.push_back(r == 0 ? n : r);
  }
  out.total = std::accumulate(out.m.begin(), out.m.end(), std::int64_t{0});
  if ((out.total / n) % p == 0) {
    out.m.back() += n;
    out.total += n;
  }
  return out;
}

} // namespace infcov

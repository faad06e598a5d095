#include "itrig/cone_ops.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "itrig/arith.hpp"
#include "itrig/hermite.hpp"

namespace itrig {

namespace {

void require_simple(const Cone& c) {
  if (!is_simple(c)) fail(ErrorKind::NotSimple, "operation needs a simple cone");
}

void require_index(int i, int lo, int hi) {
  if (i < lo || i > hi)
    fail(ErrorKind::IndexOutOfRange,
         "index " + std::to_string(i) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
}

Permutation transposition(int k, int i, int j) {
  std::vector<int> img(k);
  for (int x = 0; x < k; ++x) img[x] = x + 1;
  std::swap(img[i - 1], img[j - 1]);
  return Permutation(std::move(img));
}

std::string join(const std::vector<Integer>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i].str();
  return out + ")";
}

std::vector<Integer> reduced(std::vector<Integer> xs, const Integer& m) {
  for (auto& x : xs) x = floor_mod(x, m);
  return xs;
}

std::string grid_key(const IntMatrix& g) {
  std::string key;
  for (Eigen::Index r = 0; r < g.rows(); ++r)
    for (Eigen::Index c = 0; c < g.cols(); ++c) key += g(r, c).str() + ",";
  return key;
}

IntMatrix unimodular_inverse(const IntMatrix& u) { return row_hermite_form(u).transform; }

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : image_(std::move(one_line)) {
  std::vector<bool> seen(image_.size() + 1, false);
  for (int x : image_) {
    if (x < 1 || x > size() || seen[x]) fail(ErrorKind::ParseError, "not a permutation: " + str());
    seen[x] = true;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> img(k);
  for (int x = 0; x < k; ++x) img[x] = x + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::rotation(int k) {
  std::vector<int> img(k);
  for (int x = 0; x < k; ++x) img[x] = (x + 1) % k + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::parse(std::string_view text, int k) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) fail(ErrorKind::ParseError, "empty permutation");
  auto numbers = [&](std::string_view body) {
    std::vector<int> out;
    std::stringstream ss{std::string(body)};
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) fail(ErrorKind::ParseError, "empty entry in permutation '" + t + "'");
      out.push_back(Integer::parse(item).to<int>());
    }
    return out;
  };
  if (t.front() == '[') {
    if (t.back() != ']') fail(ErrorKind::ParseError, "unterminated one-line permutation");
    auto img = numbers(std::string_view(t).substr(1, t.size() - 2));
    if (static_cast<int>(img.size()) != k)
      fail(ErrorKind::SizeMismatch, "permutation of size " + std::to_string(img.size()) + " for " + std::to_string(k) + " edges");
    return Permutation(std::move(img));
  }
  if (t.front() != '(') fail(ErrorKind::ParseError, "permutation must start with '(' or '['");
  std::vector<int> img(k);
  for (int x = 0; x < k; ++x) img[x] = x + 1;
  std::vector<bool> used(k + 1, false);
  std::size_t pos = 0;
  while (pos < t.size()) {
    if (t[pos] != '(') fail(ErrorKind::ParseError, "malformed cycle notation '" + t + "'");
    auto close = t.find(')', pos);
    if (close == std::string::npos) fail(ErrorKind::ParseError, "unterminated cycle");
    auto body = std::string_view(t).substr(pos + 1, close - pos - 1);
    if (!body.empty()) {
      auto cyc = numbers(body);
      for (int x : cyc) {
        if (x < 1 || x > k) fail(ErrorKind::SizeMismatch, "cycle entry " + std::to_string(x) + " outside 1.." + std::to_string(k));
        if (used[x]) fail(ErrorKind::ParseError, "cycles are not disjoint");
        used[x] = true;
      }
      for (std::size_t m = 0; m < cyc.size(); ++m) img[cyc[m] - 1] = cyc[(m + 1) % cyc.size()];
    }
    pos = close + 1;
  }
  return Permutation(std::move(img));
}

bool Permutation::is_full_cycle() const {
  int x = 1, len = 0;
  do {
    x = (*this)(x);
    ++len;
  } while (x != 1);
  return len == size();
}

std::string Permutation::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < image_.size(); ++i) out += (i ? "," : "") + std::to_string(image_[i]);
  return out + "]";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) fail(ErrorKind::SizeMismatch, "composing permutations of different size");
  std::vector<int> img(a.size());
  for (int x = 1; x <= a.size(); ++x) img[x - 1] = a(b(x));
  return Permutation(std::move(img));
}

Permutation Permutation::pow(int e) const {
  Permutation out = identity(size());
  for (int i = 0; i < e; ++i) out = *this * out;
  return out;
}

std::vector<Permutation> all_permutations(int k) {
  std::vector<int> img(k);
  for (int x = 0; x < k; ++x) img[x] = x + 1;
  std::vector<Permutation> out;
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

bool all_hold(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.holds || !c.applicable; });
}

Cone permute(const Cone& c, const Permutation& s) {
  if (s.size() != c.order()) fail(ErrorKind::SizeMismatch, "permutation size differs from the number of edges");
  IntMatrix m(c.dim(), c.order());
  for (int x = 1; x <= s.size(); ++x) m.col(x - 1) = c.edge(s(x) - 1);
  return c.with_edges(std::move(m));
}

Cone adjacent(const Cone& c, int i) {
  require_index(i, 1, static_cast<int>(c.order()));
  IntMatrix m = c.edges();
  m.col(i - 1) = -m.col(i - 1);
  return c.with_edges(std::move(m));
}

std::vector<Integer> last_cosines(const ArctanForm& f) {
  const Eigen::Index k = f.order();
  std::vector<Integer> out;
  for (Eigen::Index j = 0; j + 1 < k; ++j) out.push_back(f.grid(j, k - 1));
  return out;
}

std::vector<Integer> predicted_permuted_cosines(const ArctanForm& f, const Permutation& s) {
  const int k = static_cast<int>(f.order());
  const Integer sk = f.grid(k - 1, k - 1);
  const auto a = last_cosines(f);
  const int i = s(k);
  std::vector<Integer> out(k - 1);
  if (i == k) {
    for (int x = 1; x < k; ++x) out[x - 1] = a[s(x) - 1];
    return reduced(out, sk);
  }
  if (gcd(a[i - 1], sk) != 1)
    fail(ErrorKind::CosineNotInvertible, "icos_" + std::to_string(i) + "," + std::to_string(k) + " = " + a[i - 1].str() +
                                             " is not invertible mod " + sk.str());
  const Integer inv = mod_inverse(a[i - 1], sk);
  for (int x = 1; x < k; ++x) out[x - 1] = s(x) == k ? inv : Integer(-a[s(x) - 1] * inv);
  return reduced(out, sk);
}

Check verify_permutation_relations(const Cone& c, const Permutation& s) {
  require_simple(c);
  const auto f = arctan_form(c);
  const auto g = arctan_form(permute(c, s));
  const Integer sk = isin(f, f.order());
  Check out{"permutation " + s.str(), false, true, ""};
  try {
    const auto predicted = predicted_permuted_cosines(f, s);
    const auto actual = reduced(last_cosines(g), sk);
    const Integer sk2 = isin(g, g.order());
    out.holds = predicted == actual && sk == sk2;
    out.details = "isin_k " + sk.str() + " -> " + sk2.str() + ", cosines " + join(actual) + " predicted " +
                  join(predicted) + " mod " + sk.str();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CosineNotInvertible) throw;
    out.applicable = false;
    out.details = e.what();
  }
  return out;
}

Check verify_transpose_relations(const Cone& c, int i, int j) {
  const int k = static_cast<int>(c.order());
  require_index(j, 2, k);
  require_index(i, 1, j - 1);
  Check out = verify_permutation_relations(c, transposition(k, i, j));
  out.name = "transpose (" + std::to_string(i) + "," + std::to_string(j) + ")";
  return out;
}

std::vector<Check> verify_cycle_products(const Cone& c, const Permutation& tau) {
  const int k = static_cast<int>(c.order());
  if (tau.size() != k) fail(ErrorKind::SizeMismatch, "cycle size differs from the number of edges");
  if (!tau.is_full_cycle()) fail(ErrorKind::NotACycle, tau.str() + " is not a " + std::to_string(k) + "-cycle");
  require_simple(c);
  std::vector<ArctanForm> forms;
  for (int r = 1; r <= k; ++r) forms.push_back(arctan_form(permute(c, tau.pow(r))));
  const Integer sk = isin(forms.back(), k);
  const Integer expected = floor_mod(Integer(k % 2 == 0 ? 1 : -1), sk);
  std::vector<Check> out;
  for (int j = 1; j < k; ++j) {
    Integer prod = 1;
    std::string factors;
    for (const auto& f : forms) {
      const Integer a = icos(f, j, k);
      factors += (factors.empty() ? "" : "*") + a.str();
      prod = floor_mod(prod * a, sk);
    }
    out.push_back({"cycle product j=" + std::to_string(j), prod == expected, true,
                   factors + " = " + prod.str() + ", expected " + expected.str() + " mod " + sk.str()});
  }
  for (int r = 1; r < k; ++r) {
    Check rel = verify_permutation_relations(c, tau.pow(r));
    rel.name = "cycle power " + std::to_string(r) + " cosines";
    out.push_back(std::move(rel));
  }
  return out;
}

Check verify_adjacent_relations(const Cone& c, int i) {
  const int k = static_cast<int>(c.order());
  require_index(i, 1, k);
  require_simple(c);
  const auto f = arctan_form(c);
  const auto g = arctan_form(adjacent(c, i));
  const Integer sk = isin(f, k), sk2 = isin(g, k);
  auto predicted = last_cosines(f);
  for (int x = 1; x < k; ++x)
    if (i == k || x == i) predicted[x - 1] = -predicted[x - 1];
  predicted = reduced(predicted, sk);
  const auto actual = reduced(last_cosines(g), sk);
  return {"adjacent " + std::to_string(i), predicted == actual && sk == sk2, true,
          "isin_k " + sk.str() + " -> " + sk2.str() + ", cosines " + join(actual) + " predicted " + join(predicted) +
              " mod " + sk.str()};
}

IntMatrix special_matrix(const Cone& c) {
  require_simple(c);
  const int k = static_cast<int>(c.order());
  const Permutation tau = Permutation::rotation(k);
  IntMatrix m = IntMatrix::Zero(k, k);
  for (int r = 0; r < k; ++r) {
    const auto f = arctan_form(permute(c, tau.pow(r)));
    for (int col = 0; col < k; ++col)
      if (col != r) m(r, col) = icos(f, (col - r + k) % k, k);
  }
  return m;
}

Check verify_special_determinant(const Cone& c) {
  const int k = static_cast<int>(c.order());
  const IntMatrix m = special_matrix(c);
  const Integer sk = isin(arctan_form(c), k);
  const Integer d = floor_mod(determinant(m), sk);
  const Integer expected = floor_mod(Integer(1 - k), sk);
  return {"special matrix determinant", d == expected, true,
          "det = " + d.str() + ", expected 1-k = " + expected.str() + " mod " + sk.str()};
}

AlphaCoords canonical_point_coords(const Cone& c) {
  require_simple(c);
  const auto f = arctan_form(c);
  const Eigen::Index k = f.order();
  const Integer iv = index_of(f);
  std::vector<Integer> x(k);
  for (Eigen::Index r = k - 1; r >= 0; --r) {
    Integer rhs = iv;
    for (Eigen::Index col = r + 1; col < k; ++col) rhs -= f.grid(r, col) * x[col];
    x[r] = rhs / f.grid(r, r);
  }
  return {reduced(std::move(x), iv), iv};
}

Check verify_canonical_point(const Cone& c) {
  const auto coords = canonical_point_coords(c);
  const auto f = arctan_form(c);
  auto predicted = last_cosines(f);
  for (auto& a : predicted) a = -a;
  predicted.emplace_back(1);
  predicted = reduced(predicted, coords.modulus);
  return {"canonical point", predicted == coords.coords, true,
          "coords " + join(coords.coords) + " predicted " + join(predicted) + " mod " + coords.modulus.str()};
}

std::vector<Check> simplex_partner_check(const Simplex& s) {
  const auto& v = s.vertices();
  const int k = static_cast<int>(s.order());
  if (k < 2) fail(ErrorKind::TooSmall, "simplex relation needs at least two edges");
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (integer_length(v[a], v[b]) != 1)
        fail(ErrorKind::NonUnitEdgeLengths, "edge A" + std::to_string(a) + "A" + std::to_string(b) + " has integer length " +
                                                integer_length(v[a], v[b]).str());
  const Cone alpha = vertex_cone(s, 0), beta = vertex_cone(s, 1);
  require_simple(alpha);
  require_simple(beta);
  const auto fa = arctan_form(alpha), fb = arctan_form(beta);
  const Integer sa = isin(fa, k), sb = isin(fb, k);
  const auto a = last_cosines(fa), b = last_cosines(fb);
  std::vector<Check> out;
  out.push_back({"simplex sine", sa == sb, true, "isin_k alpha = " + sa.str() + ", isin_k beta = " + sb.str()});
  Integer sum = b[0];
  std::string trace = b[0].str() + " + (";
  for (int i = 0; i + 1 < k; ++i) {
    sum += a[i];
    trace += (i ? " + " : "") + a[i].str();
  }
  const Integer r = floor_mod(sum, sa);
  out.push_back({"simplex cosine sum", r == floor_mod(Integer(1), sa), true,
                 trace + ") = " + r.str() + " mod " + sa.str()});
  for (int x = 2; x < k; ++x)
    out.push_back({"simplex cosine " + std::to_string(x), a[x - 1] == b[x - 1], true,
                   "icos_" + std::to_string(x) + ",k alpha = " + a[x - 1].str() + ", beta = " + b[x - 1].str()});
  return out;
}

Cone cone_from_grid(const Cone& like, const IntMatrix& grid) {
  const auto f = arctan_form(like);
  IntMatrix m = IntMatrix::Zero(like.dim(), grid.cols());
  m.topRows(grid.rows()) = grid;
  return like.with_edges(unimodular_inverse(f.transform) * m);
}

Cone euclid_reduce(const Cone& c, int i) {
  const int k = static_cast<int>(c.order());
  require_index(i, 1, k - 1);
  require_simple(c);
  const auto f = arctan_form(c);
  const Integer ai = icos(f, i, k);
  if (ai == 0) fail(ErrorKind::ZeroCosine, "icos_" + std::to_string(i) + "," + std::to_string(k) + " is zero");
  IntMatrix m = IntMatrix::Identity(k, k);
  for (int x = 1; x < k; ++x) m(x - 1, k - 1) = x == i ? isin(f, k) : icos(f, x, k);
  m(k - 1, k - 1) = ai;
  return cone_from_grid(c, arctan_form(Cone(m)).grid);
}

Integer partial_quotient(const Cone& c, int i) {
  const int k = static_cast<int>(c.order());
  require_index(i, 1, k - 1);
  const auto f = arctan_form(c);
  const Integer ai = icos(f, i, k);
  if (ai == 0) fail(ErrorKind::ZeroCosine, "icos_" + std::to_string(i) + "," + std::to_string(k) + " is zero");
  return floor_div(isin(f, k), ai);
}

Cone flip(const Cone& c, int i) {
  const int k = static_cast<int>(c.order());
  require_index(i, 1, k - 1);
  return permute(adjacent(c, i), transposition(k, i, k));
}

Cone approximation_step(const Cone& c, int i) {
  const int k = static_cast<int>(c.order());
  require_index(i, 1, k - 1);
  require_simple(c);
  if (icos(arctan_form(c), i, k) < 2) fail(ErrorKind::CosineTooSmall, "step needs icos_" + std::to_string(i) + "," + std::to_string(k) + " >= 2");
  const Permutation swap = transposition(k, i, k);
  const Cone t = permute(c, swap);
  const Cone fl = flip(c, i);
  auto exceeds_one = [&](const Cone& x) {
    const Integer a = icos(arctan_form(x), i, k);
    return a != 0 && partial_quotient(x, i) > 1;
  };
  std::optional<Cone> r1, r2;
  if (exceeds_one(t)) r1 = flip(euclid_reduce(t, i), i);
  if (exceeds_one(fl)) r2 = permute(euclid_reduce(fl, i), swap);
  if (r1 && r2) {
    if (!congruent(*r1, *r2)) fail(ErrorKind::BranchAmbiguity, "both reduction branches apply and disagree");
    return *r1;
  }
  if (r1) return *r1;
  if (r2) return *r2;
  fail(ErrorKind::BranchAmbiguity, "no reduction branch applies");
}

std::vector<SbaNode> sba_cones(const Cone& c, int max_steps) {
  require_simple(c);
  const int k = static_cast<int>(c.order());
  std::vector<SbaNode> nodes;
  std::set<std::string> seen;
  auto visit = [&](Cone cone, std::optional<std::size_t> parent, int step, int depth) {
    IntMatrix g = arctan_form(cone).grid;
    if (!seen.insert(grid_key(g)).second) return;
    nodes.push_back({std::move(cone), std::move(g), parent, step, depth});
  };
  for (const auto& s : all_permutations(k)) visit(permute(c, s), std::nullopt, 0, 0);
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    if (nodes[n].depth >= max_steps) continue;
    for (int i = 1; i < k; ++i) {
      if (nodes[n].grid(i - 1, k - 1) < 2) continue;
      try {
        Cone next = approximation_step(nodes[n].cone, i);
        visit(std::move(next), n, i, nodes[n].depth + 1);
      } catch (const Error&) {
        // an inapplicable step is not part of the closure
      }
    }
  }
  return nodes;
}

std::vector<Integer> plucker(const ArctanForm& f) {
  const Eigen::Index k = f.order();
  if (k < 2) fail(ErrorKind::TooSmall, "Plücker coordinates need at least two edges");
  std::vector<Integer> out;
  for (Eigen::Index i = 0; i < k; ++i) {
    IntMatrix minor(k - 1, k - 1);
    for (Eigen::Index col = 0, j = 0; col < k; ++col)
      if (col != i) minor.col(j++) = f.grid.col(col).head(k - 1);
    Integer d = determinant(minor);
    out.push_back(i % 2 == 0 ? d : Integer(-d));
  }
  return out;
}

std::vector<Integer> plucker(const Cone& c) { return plucker(arctan_form(c)); }

std::vector<Check> verify_plucker_transpose(const Cone& c, int i) {
  const int k = static_cast<int>(c.order());
  require_index(i, 1, k - 1);
  const auto f = arctan_form(c);
  const auto g = arctan_form(permute(c, transposition(k, i, k)));
  const Integer iv = index_of(f);
  const Integer ratio = iv / isin(f, k), ratio2 = iv / isin(g, k);
  const Integer rhs = floor_mod(ratio * ratio2, iv);
  const auto p = plucker(f), q = plucker(g);
  std::vector<Check> out;
  for (int j = 0; j < k; ++j) {
    const Integer lhs = floor_mod(p[j] * q[j], iv);
    out.push_back({"plucker transpose (" + std::to_string(i) + "," + std::to_string(k) + ") j=" + std::to_string(j + 1),
                   lhs == rhs, true,
                   p[j].str() + "*" + q[j].str() + " = " + lhs.str() + ", expected " + ratio.str() + "*" + ratio2.str() +
                       " = " + rhs.str() + " mod " + iv.str()});
  }
  Integer prod = 1;
  for (int x = 1; x < k; ++x) prod *= isin(f, x);
  out.push_back({"index over last sine", ratio == prod, true,
                 "iv/isin_k = " + ratio.str() + ", product of other sines = " + prod.str()});
  return out;
}

}  // namespace itrig

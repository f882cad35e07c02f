#include <algorithm>
#include <numeric>

#include "intersection.hpp"
#include "puiseux.hpp"

namespace sextic {

using namespace detail;

namespace {

int integer_of(const Rational& q, const char* what) {
  if (q.get_den() != 1) throw ConsistencyError(std::string("non-integral ") + what);
  return static_cast<int>(q.get_num().get_si());
}

// Multiplicities of the infinitely near points of one branch, by the
// Euclidean algorithm on its characteristic exponents.
std::vector<int> branch_multiplicities(int n, const std::vector<int>& beta) {
  std::vector<int> seq;
  int e = n, prev = 0;
  for (int b : beta) {
    int a = b - prev, d = e;
    while (d != 0) {
      for (int k = 0; k < a / d; ++k) seq.push_back(d);
      int r = a % d;
      a = d;
      d = r;
    }
    e = a;
    prev = b;
  }
  if (e != 1) throw ConsistencyError("characteristic exponents do not reduce the ramification to 1");
  return seq;
}

int mult_at(const std::vector<int>& seq, std::size_t k) { return k < seq.size() ? seq[k] : 1; }

}  // namespace

namespace detail {

Resolution resolve_germ(const Field& K, BiPoly G, int trusted, const LocalOptions& opt) {
  Resolution res;
  if (G.empty()) throw std::domain_error("zero germ");
  if (G.count({0, 0})) throw NotOnCurve();
  res.m = bp_order(G);
  if (res.m == 1) {
    res.r = 1;
    BranchData b;
    b.n = 1;
    b.initial_form = "smooth";
    res.branches.push_back(b);
    res.contacts = {{0}};
    return res;
  }

  // Shear so the tangent cone misses the Y axis.
  KPoly cone = bp_form(K, G, res.m);
  Num c = K.zero();
  for (int k = 0;; ++k) {
    Rational cand = k == 0 ? Rational(0) : Rational((k + 1) / 2 * (k % 2 ? 1 : -1));
    Num cn = K.from_rational(cand);
    // Coefficient of Y^m after X -> X + cY is cone(c, 1).
    Num val = K.zero(), pw = K.one();
    for (const auto& a : cone) {
      val = K.add(val, K.mul(a, pw));
      pw = K.mul(pw, cn);
    }
    if (!K.is_zero(val)) {
      c = cn;
      break;
    }
  }
  if (!K.is_zero(c)) G = bp_shear(K, G, c);

  std::vector<PuiseuxBranch> pb = puiseux_branches(K, G, trusted, opt);
  const int r = static_cast<int>(pb.size());
  res.r = r;

  std::vector<std::vector<int>> betas(r);
  int total_n = 0;
  for (int i = 0; i < r; ++i) {
    total_n += pb[i].n;
    for (const auto& e : pb[i].char_exponents) betas[i].push_back(integer_of(e * pb[i].n, "characteristic exponent"));
  }
  if (total_n != res.m) throw ConsistencyError("branch multiplicities do not add up to the multiplicity");

  // Pairwise intersection numbers from the contact exponents.
  res.contacts.assign(r, std::vector<int>(r, 0));
  auto inter = [&](int a, int b, const Rational& kappa) {
    Rational sum = kappa;
    int e_prev = pb[a].n;
    int e = pb[a].n;
    for (int beta : betas[a]) {
      e = std::gcd(e, beta);
      Rational ratio(beta, pb[a].n);
      ratio.canonicalize();
      sum += (e_prev - e) * std::min(ratio, kappa);
      e_prev = e;
    }
    return integer_of(sum * pb[b].n, "intersection number");
  };
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) {
      Rational kappa = contact_exponent(pb[a], pb[b]);
      int iab = inter(a, b, kappa), iba = inter(b, a, kappa);
      if (iab != iba) throw ConsistencyError("asymmetric branch intersection numbers");
      res.contacts[a][b] = res.contacts[b][a] = iab;
    }

  // delta from branch Milnor numbers and intersections.
  int twice_delta = 0;
  for (int a = 0; a < r; ++a) {
    int e_prev = pb[a].n, e = pb[a].n, mu_b = 0;
    for (int beta : betas[a]) {
      e = std::gcd(e, beta);
      mu_b += (e_prev - e) * (beta - 1);
      e_prev = e;
    }
    twice_delta += mu_b;
    for (int b = a + 1; b < r; ++b) twice_delta += 2 * res.contacts[a][b];
  }
  res.delta = twice_delta / 2;

  // Infinitely near points: branches a, b pass through the same first k
  // points where sum_{i<k} m_i(a) m_i(b) = I(a, b) (Noether).
  std::vector<std::vector<int>> seqs(r);
  for (int a = 0; a < r; ++a) seqs[a] = branch_multiplicities(pb[a].n, betas[a]);
  std::vector<std::vector<int>> shared(r, std::vector<int>(r, 0));
  int depth = 1;
  for (int a = 0; a < r; ++a) depth = std::max<int>(depth, seqs[a].size() + 1);
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) {
      int sum = 0, k = 0;
      while (sum < res.contacts[a][b]) {
        sum += mult_at(seqs[a], k) * mult_at(seqs[b], k);
        ++k;
      }
      if (sum != res.contacts[a][b]) throw ConsistencyError("Noether decomposition of an intersection number fails");
      shared[a][b] = shared[b][a] = k;
      depth = std::max(depth, k + 1);
    }
  int tree_delta = 0;
  for (int level = 0; level < depth; ++level) {
    std::vector<int> group(r, -1);
    for (int a = 0; a < r; ++a) {
      if (group[a] >= 0) continue;
      group[a] = a;
      int mult = mult_at(seqs[a], level);
      for (int b = a + 1; b < r; ++b)
        if (group[b] < 0 && shared[a][b] > level) {
          group[b] = a;
          mult += mult_at(seqs[b], level);
        }
      tree_delta += mult * (mult - 1) / 2;
      if (mult >= 2) res.mult_sequence.push_back(mult);
    }
  }
  if (tree_delta != res.delta) throw ConsistencyError("delta from infinitely near points disagrees with branch data");

  for (int a = 0; a < r; ++a) {
    BranchData b;
    b.index = a;
    b.n = pb[a].n;
    b.beta = betas[a];
    b.first_exponent = pb[a].first_exponent;
    b.initial_form = pb[a].initial_form;
    b.field_degree = pb[a].field_degree;
    res.branches.push_back(std::move(b));
  }
  return res;
}

}  // namespace detail

Resolution resolve(const Poly& germ, const LocalOptions& opt) {
  Field Q;
  return resolve_germ(Q, bp_from_poly(Q, germ), 0, opt);
}

Resolution resolve_at(const Poly& f, const AlgebraicPoint& p, const LocalOptions& opt) {
  PointField pf = point_field(p);
  return resolve_germ(pf.K, germ_at(pf, f), pf.K.level(), opt);
}

int delta(const Poly& f, const AlgebraicPoint& p, const LocalOptions& opt) {
  return analyze_point(f, p, opt).delta;
}

LocalSingularity analyze_point(const Poly& f, const AlgebraicPoint& p, const LocalOptions& opt) {
  PointField pf = point_field(p);
  BiPoly g = germ_at(pf, f);
  if (g.empty()) throw std::domain_error("zero polynomial");
  if (g.count({0, 0})) throw NotOnCurve();
  LocalSingularity s;
  s.point = p;
  int mu = 0;
  try {
    mu = fulton(pf.K, bp_dx(pf.K, g), bp_dy(pf.K, g));
  } catch (const InfiniteIntersection&) {
    throw NonIsolatedSingularity();
  }
  Resolution res = resolve_germ(pf.K, g, pf.K.level(), opt);
  s.m = res.m;
  s.mu = mu;
  s.r = res.r;
  s.delta = res.delta;
  if (2 * res.delta != mu + res.r - 1)
    throw ConsistencyError("Milnor number " + std::to_string(mu) + " from the partials disagrees with 2*delta - r + 1 = " +
                           std::to_string(2 * res.delta - res.r + 1) + " at " + p.to_string());
  s.mult_sequence = res.mult_sequence;
  s.branches = res.branches;
  s.contacts = res.contacts;
  s.signature = signature(s.m, s.mu, s.branches, s.contacts);
  s.type = classify(s);
  return s;
}

}  // namespace sextic

#include "puiseux.hpp"

#include <numeric>

namespace sextic::detail {

namespace {

struct Context {
  int s = 0;
  int n = 1;
  std::vector<Rational> exps;
  std::vector<PathStep> path;
};

struct Face {
  int index = 0;
  int i0 = 0, j0 = 0, i1 = 0, j1 = 0;
  int p = 1, q = 1;
};

mpz_class binomial(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

std::string exponent_text(const Rational& e) {
  if (e.get_den() == 1) return e.get_num().get_str();
  return "(" + e.get_str() + ")";
}

class Expander {
 public:
  Expander(int trusted, const LocalOptions& opt) : trusted_(trusted), opt_(opt) {}

  void node(const Field& K, BiPoly G, int N, const Context& ctx, std::vector<PuiseuxBranch>& out, int depth) {
    if (depth > opt_.depth_cap) throw Unresolved("Puiseux expansion exceeds the truncation cap");
    // Support with zero tests that force a split on zero divisors.
    for (auto it = G.begin(); it != G.end();) {
      if (is_zero(K, it->second))
        it = G.erase(it);
      else
        ++it;
    }
    int min_j = -1;
    for (const auto& [k, c] : G)
      if (min_j < 0 || k.second < min_j) min_j = k.second;
    if (min_j >= 2) throw NotSquarefree();
    if (min_j == 1) {
      PuiseuxBranch b;
      b.n = ctx.n;
      b.char_exponents = ctx.exps;
      b.path = ctx.path;
      PathStep st;
      st.choice = {-1, 0, 0};
      st.infinite = true;
      st.s = ctx.s;
      st.n = ctx.n;
      b.path.push_back(st);
      b.initial_form = ctx.path.empty() ? "y" : "";
      b.field_degree = K.degree();
      out.push_back(std::move(b));
      BiPoly h;
      for (const auto& [k, c] : G) h.emplace(std::pair{k.first, k.second - 1}, c);
      G = std::move(h);
      --N;
    }
    if (N == 0) return;

    // Lowest X power for each Y power up to N.
    std::vector<int> low(N + 1, -1);
    for (const auto& [k, c] : G)
      if (k.second <= N && (low[k.second] < 0 || k.first < low[k.second])) low[k.second] = k.first;
    if (low[N] != 0) throw std::logic_error("germ is not Y-general of the expected order");
    if (low[0] < 0) throw std::logic_error("germ has a Y factor after extraction");

    std::vector<Face> faces;
    int ci = 0, cj = N;
    while (cj > 0) {
      int best_j = -1;
      Rational best;
      for (int j = cj - 1; j >= 0; --j) {
        if (low[j] < 0) continue;
        Rational sl(low[j] - ci, cj - j);
        sl.canonicalize();
        if (best_j < 0 || sl < best || (sl == best && j < best_j)) {
          best = sl;
          best_j = j;
        }
      }
      Face f;
      f.index = static_cast<int>(faces.size());
      f.i0 = ci;
      f.j0 = cj;
      f.i1 = low[best_j];
      f.j1 = best_j;
      int di = f.i1 - f.i0, dj = f.j0 - f.j1;
      int g = std::gcd(di, dj);
      f.p = dj / g;
      f.q = di / g;
      faces.push_back(f);
      ci = f.i1;
      cj = f.j1;
    }

    for (const auto& f : faces) {
      int g = (f.j0 - f.j1) / f.p;
      KPoly phi(g + 1);
      for (int k = 0; k <= g; ++k) phi[k] = bp_coeff(G, f.i1 - k * f.q, f.j1 + k * f.p);
      phi = K.kp_trim(std::move(phi));
      int piece = 0;
      for (const auto& [psi, e] : K.kp_squarefree(phi)) handle_piece(K, G, f, psi, e, ctx, piece, out, depth);
    }
  }

 private:
  bool is_zero(const Field& K, const Num& a) const {
    if (K.is_zero(a)) return true;
    if (K.level() > trusted_) (void)K.inv(a);
    return false;
  }

  void handle_piece(const Field& K, const BiPoly& G, const Face& f, const KPoly& psi, int e, const Context& ctx,
                    int& piece, std::vector<PuiseuxBranch>& out, int depth) {
    const int d = static_cast<int>(psi.size()) - 1;
    const int my_piece = piece++;
    PathStep st;
    st.slope = Rational(f.q, f.p);
    st.slope.canonicalize();
    st.s = ctx.s;
    st.n = ctx.n;
    const int s1 = ctx.s * f.p + f.q;
    const int n1 = ctx.n * f.p;
    Rational new_exp(s1, n1);
    new_exp.canonicalize();

    Context next = ctx;
    next.s = s1;
    next.n = n1;
    if (f.p > 1) next.exps.push_back(new_exp);

    if (e == 1) {
      for (int c = 0; c < d; ++c) {
        PuiseuxBranch b;
        b.n = n1;
        b.char_exponents = next.exps;
        b.path = ctx.path;
        st.choice = {f.index, my_piece, c};
        b.path.push_back(st);
        if (ctx.path.empty()) {
          b.first_exponent = st.slope;
          b.initial_form = initial_form(K, f, psi);
        }
        b.field_degree = K.degree() * d;
        out.push_back(std::move(b));
      }
      return;
    }

    std::vector<PuiseuxBranch> sub;
    st.choice = {f.index, my_piece, 0};
    next.path.push_back(st);
    if (d == 1) {
      Num z = K.neg(psi[0]);
      expand_root(K, G, f, z, e, next, sub, depth);
    } else {
      try {
        Field K2 = K.extend(psi, opt_.tower_cap);
        BiPoly G2;
        for (const auto& [k, c] : G) G2.emplace(k, K2.embed(c));
        expand_root(K2, G2, f, K2.generator(), e, next, sub, depth);
      } catch (const TowerSplit& split) {
        if (split.level() != K.level() + 1) throw;
        --piece;
        KPoly g = split.factor();
        KPoly h = K.kp_monic(K.kp_divexact(psi, g));
        handle_piece(K, G, f, g, e, ctx, piece, out, depth);
        handle_piece(K, G, f, h, e, ctx, piece, out, depth);
        return;
      } catch (const TowerCapExceeded& cap) {
        throw Unresolved(cap.what());
      }
    }
    const std::size_t at = ctx.path.size();
    for (int c = 0; c < d; ++c) {
      for (auto b : sub) {
        b.path[at].choice[2] = c;
        if (ctx.path.empty()) {
          b.first_exponent = st.slope;
          b.initial_form = initial_form(K, f, psi);
        }
        out.push_back(std::move(b));
      }
    }
  }

  // G(mu X^p, X^q (lambda + Y)) / X^w with lambda = z^u, mu = z^v, up - vq = 1.
  void expand_root(const Field& K, const BiPoly& G, const Face& f, const Num& z, int e, const Context& next,
                   std::vector<PuiseuxBranch>& sub, int depth) {
    int u = 1;
    while ((u * f.p - 1) % f.q != 0) ++u;
    int v = (u * f.p - 1) / f.q;
    Num lambda = K.pow(z, u), mu = K.pow(z, v);
    const int w = f.i1 * f.p + f.j1 * f.q;
    int maxi = 0, maxj = 0;
    for (const auto& [k, c] : G) {
      maxi = std::max(maxi, k.first);
      maxj = std::max(maxj, k.second);
    }
    std::vector<Num> mupow{K.one()}, lampow{K.one()};
    for (int i = 1; i <= maxi; ++i) mupow.push_back(K.mul(mupow.back(), mu));
    for (int j = 1; j <= maxj; ++j) lampow.push_back(K.mul(lampow.back(), lambda));
    BiPoly G1;
    for (const auto& [k, c] : G) {
      const int base = f.p * k.first + f.q * k.second - w;
      if (base < 0) throw std::logic_error("support point below the Newton boundary");
      Num cm = K.mul(c, mupow[k.first]);
      for (int t = 0; t <= k.second; ++t) {
        Num term = K.mul(cm, K.mul(K.from_rational(Rational(binomial(k.second, t))), lampow[k.second - t]));
        if (K.is_zero(term)) continue;
        auto [it, fresh] = G1.emplace(std::pair{base, t}, term);
        if (!fresh) {
          it->second = K.add(it->second, term);
          if (K.is_zero(it->second)) G1.erase(it);
        }
      }
    }
    node(K, std::move(G1), e, next, sub, depth + 1);
  }

  static std::string initial_form(const Field& K, const Face& f, const KPoly& psi) {
    std::string lhs = f.p == 1 ? "y" : "y^" + std::to_string(f.p);
    std::string rhs = f.q == 1 ? "x" : "x^" + std::to_string(f.q);
    if (psi.size() == 2) return lhs + " = " + K.to_string(K.neg(psi[0])) + "*" + rhs;
    return lhs + " = z*" + rhs + " with z a root of a degree " + std::to_string(psi.size() - 1) + " factor";
  }

  int trusted_;
  const LocalOptions& opt_;
};

}  // namespace

std::vector<PuiseuxBranch> puiseux_branches(const Field& K, const BiPoly& germ, int trusted,
                                            const LocalOptions& opt) {
  std::vector<PuiseuxBranch> out;
  int N = -1;
  for (const auto& [k, c] : germ)
    if (k.first == 0 && (N < 0 || k.second < N) && !K.is_zero(c)) N = k.second;
  if (N <= 0) throw std::logic_error("germ must vanish at the origin and be Y-general");
  Expander(trusted, opt).node(K, germ, N, Context{}, out, 0);
  return out;
}

Rational contact_exponent(const PuiseuxBranch& a, const PuiseuxBranch& b) {
  std::size_t i = 0;
  while (i < a.path.size() && i < b.path.size() && a.path[i].choice == b.path[i].choice &&
         a.path[i].infinite == b.path[i].infinite)
    ++i;
  if (i == a.path.size() || i == b.path.size()) throw std::logic_error("branch paths do not diverge");
  const PathStep& sa = a.path[i];
  const PathStep& sb = b.path[i];
  Rational local;
  if (sa.infinite)
    local = sb.slope;
  else if (sb.infinite)
    local = sa.slope;
  else
    local = std::min(sa.slope, sb.slope);
  Rational k = (Rational(sa.s) + local) / sa.n;
  return k;
}

}  // namespace sextic::detail

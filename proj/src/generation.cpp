#include "qlsmodcat/generation.hpp"

#include <map>

#include "qlsmodcat/errors.hpp"

namespace qlsmodcat {

namespace {

int u_degree(const QlsContext& ctx, std::size_t b) { return ctx.U->degree[b]; }
int u_group(const QlsContext& ctx, std::size_t b) {
  return static_cast<int>(b % static_cast<std::size_t>(ctx.datum.group().order()));
}

// Degree-n parts generated by the layer-one vectors.
std::vector<std::vector<Vec>> generated_layers(const QlsContext& ctx, const std::vector<Vec>& one, int top) {
  const Algebra& U = ctx.U->alg;
  std::vector<std::vector<Vec>> out{{U.unit}};
  for (int n = 1; n <= top; ++n) {
    Echelon<CycloNumber> e;
    for (const auto& x : one)
      for (const auto& y : out.back()) e.insert(U.multiply(x, y));
    out.push_back(e.basis());
  }
  return out;
}

}  // namespace

GradedFlag flag_of_subalgebra(const QlsContext& ctx, const std::vector<Vec>& W) {
  std::vector<Vec> one;
  for (const auto& w : W) one.push_back(ctx.x_of(w));
  int top = 0;
  for (int i = 0; i < ctx.datum.theta(); ++i) top += ctx.datum.N(i) - 1;
  GradedFlag f;
  f.layers = generated_layers(ctx, one, top);
  while (f.layers.size() > 1 && f.layers.back().empty()) f.layers.pop_back();
  return f;
}

GenerationResult check_degree_one_generation(const QlsContext& ctx, const GradedFlag& K) {
  const HopfAlgebraRep& H = *ctx.U;
  const Algebra& U = H.alg;
  const std::size_t n = H.dim();
  const int m = static_cast<int>(K.layers.size()) - 1;
  auto violated = [](const std::string& what) { throw Error(ErrorKind::HypothesisViolated, what); };
  if (m < 0) violated("empty flag");
  std::vector<Echelon<CycloNumber>> ech(m + 1);
  for (int i = 0; i <= m; ++i)
    for (const auto& v : K.layers[i]) ech[i].insert(v);

  // (1) K(i) ⊆ Q(i).
  for (int i = 0; i <= m; ++i)
    for (const auto& v : K.layers[i])
      for (const auto& [b, c] : v)
        if (u_degree(ctx, b) != i || u_group(ctx, b) != 0)
          violated("(1): K(" + std::to_string(i) + ") contains " + U.labels[b] + " outside Q(" + std::to_string(i) + ")");
  if (ech[0].rank() != 1 || !ech[0].contains(U.unit)) violated("(1): K(0) must be k1");
  // Graded subalgebra.
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j)
      for (const auto& x : K.layers[i])
        for (const auto& y : K.layers[j]) {
          const Vec p = U.multiply(x, y);
          if (p.empty()) continue;
          if (i + j > m || !ech[i + j].contains(p))
            violated("not a graded subalgebra: K(" + std::to_string(i) + ")K(" + std::to_string(j) + ") leaves K");
        }
  // (2) K(1) is a Gamma-subcomodule: homogeneous components stay inside.
  if (m >= 1)
    for (const auto& v : K.layers[1]) {
      std::map<int, Vec> parts;
      for (const auto& [b, c] : v) {
        int g = -1;
        for (int i = 0; i < ctx.datum.theta(); ++i)
          if (ctx.x(i).leading() == b) g = ctx.datum.g(i);
        parts[g].push_back(b, c);
      }
      for (const auto& [g, part] : parts)
        if (!ech[1].contains(part)) violated("(2): K(1) is not a Gamma-subcomodule of V");
    }
  // (3) Delta(K(k)) ⊆ sum_i U(i) (x) K(k-i).
  for (int k = 0; k <= m; ++k)
    for (const auto& v : K.layers[k]) {
      std::map<std::size_t, Accumulator<CycloNumber>> legs;
      for (const auto& [p, c] : H.coproduct(v)) legs[p / n].add(p % n, c);
      for (auto& [h, acc] : legs) {
        const Vec right = acc.finish();
        const int rest = k - u_degree(ctx, h);
        if (right.empty()) continue;
        if (rest < 0 || rest > m || !ech[rest].contains(right))
          violated("(3): Delta(K(" + std::to_string(k) + ")) has a term " + U.labels[h] + " (x) " +
                   vec_to_string(right, U.labels) + " outside U (x) K");
      }
    }

  GenerationResult r;
  const auto gen = generated_layers(ctx, m >= 1 ? K.layers[1] : std::vector<Vec>{}, m);
  r.pass = true;
  for (int i = 0; i <= m; ++i) {
    r.flag_dims.push_back(ech[i].rank());
    r.generated_dims.push_back(gen[i].size());
    if (r.flag_dims.back() != r.generated_dims.back()) r.pass = false;
  }
  return r;
}

}  // namespace qlsmodcat

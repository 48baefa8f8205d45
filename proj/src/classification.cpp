#include "qlsmodcat/classification.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "qlsmodcat/errors.hpp"

namespace qlsmodcat {

namespace {

std::string subgroup_key(const Subgroup& F) {
  std::ostringstream os;
  os << "{";
  const auto labels = group_labels(F.parent());
  for (int i = 0; i < F.size(); ++i) os << (i ? "," : "") << labels[F.element(i)];
  os << "}";
  return os.str();
}

std::string psi_key(const TwoCocycle& psi, bool strict) {
  if (!strict) return psi.class_tag();
  std::string s = "[";
  for (std::size_t i = 0; i < psi.table().size(); ++i) s += (i ? "," : "") + psi.table()[i].to_string();
  return s + "]";
}

// Sorting key for rows: subgroup order, then the element list, then the rest.
std::vector<int> subgroup_sort_key(const Subgroup& F) {
  std::vector<int> k{F.size()};
  k.insert(k.end(), F.elements().begin(), F.elements().end());
  return k;
}

}  // namespace

std::string W_to_string(const std::vector<Vec>& W) {
  if (W.empty()) return "0";
  std::vector<std::string> names;
  int theta = 0;
  for (const auto& w : W)
    for (const auto& [i, c] : w) theta = std::max(theta, static_cast<int>(i) + 1);
  for (int i = 0; i < theta; ++i) names.push_back("x" + std::to_string(i + 1));
  std::string s = "span(";
  for (std::size_t k = 0; k < W.size(); ++k) s += (k ? "," : "") + vec_to_string(W[k], names);
  return s + ")";
}

std::string params_to_string(const ModCatDatum& m) {
  std::string s = "xi=(";
  for (std::size_t k = 0; k < m.xi.size(); ++k) s += (k ? "," : "") + m.xi[k].to_string();
  s += ")";
  bool any = false;
  for (const auto& [kl, v] : m.alpha) {
    if (v.is_zero()) continue;
    s += std::string(any ? "," : " alpha=(") + std::to_string(kl.first + 1) + std::to_string(kl.second + 1) + ":" +
         v.to_string();
    any = true;
  }
  if (any) s += ")";
  return s;
}

FreePositions free_positions(const QlsContext& ctx, const TwoCocycle& psi, const std::vector<Vec>& W) {
  FreePositions fp;
  const int s = static_cast<int>(W.size());
  ModCatDatum probe(psi);
  probe.W = W;
  probe.xi.assign(s, CycloNumber());
  for (int k = 0; k < s; ++k) {
    probe.xi[k] = CycloNumber(1L);
    if (validate_modcat_datum(ctx, probe).ok) fp.xi.push_back(k);
    probe.xi[k] = CycloNumber();
  }
  for (int k = 0; k < s; ++k)
    for (int l = k + 1; l < s; ++l) {
      probe.alpha = {{{k, l}, CycloNumber(1L)}};
      if (validate_modcat_datum(ctx, probe).ok) fp.alpha.emplace_back(k, l);
    }
  return fp;
}

std::vector<std::vector<Vec>> coordinate_subcomodules(const QlsDatum& d) {
  std::vector<std::vector<Vec>> out;
  const int t = d.theta();
  if (t > 20) throw Error(ErrorKind::SizeBound, "too many coordinates for a subset sweep");
  for (int mask = 0; mask < (1 << t); ++mask) {
    std::vector<int> c;
    for (int i = 0; i < t; ++i)
      if (mask >> i & 1) c.push_back(i);
    out.push_back(coordinate_subspace(c));
  }
  return out;
}

std::vector<ModCatDatum> enumerate_modcat_data(const QlsDatum& d, const std::vector<CycloNumber>& sample,
                                               int max_group_order, const std::vector<std::vector<Vec>>& extra_W) {
  if (d.group().order() > max_group_order)
    throw Error(ErrorKind::SizeBound, "|Gamma| = " + std::to_string(d.group().order()) + " exceeds " +
                                          std::to_string(max_group_order));
  if (sample.empty()) throw Error(ErrorKind::ValidationFailed, "scalar sample is empty");
  const auto ctx = make_context(d);
  auto Ws = coordinate_subcomodules(d);
  Ws.insert(Ws.end(), extra_W.begin(), extra_W.end());
  std::vector<ModCatDatum> out;
  for (const auto& F : enumerate_subgroups(d.group(), max_group_order))
    for (const auto& psi : cocycle_classes(F))
      for (const auto& W : Ws) {
        if (!analyze_W(*ctx, F, W).problems.empty()) continue;
        const FreePositions fp = free_positions(*ctx, psi, W);
        const int free = fp.count();
        std::vector<std::size_t> pick(free, 0);
        while (true) {
          ModCatDatum m(psi);
          m.W = W;
          m.xi.assign(W.size(), CycloNumber());
          for (int p = 0; p < free; ++p) {
            const CycloNumber& v = sample[pick[p]];
            if (p < static_cast<int>(fp.xi.size())) m.xi[fp.xi[p]] = v;
            else if (!v.is_zero()) m.alpha[fp.alpha[p - fp.xi.size()]] = v;
          }
          out.push_back(std::move(m));
          int p = free - 1;
          while (p >= 0 && ++pick[p] == sample.size()) pick[p--] = 0;
          if (p < 0) break;
        }
      }
  return out;
}

std::string row_key(const ModCatDatum& m, bool strict) {
  return subgroup_key(m.F()) + " " + psi_key(m.psi, strict) + " " + W_to_string(m.W);
}

std::string datum_key(const ModCatDatum& m, bool strict) { return row_key(m, strict) + " " + params_to_string(m); }

std::vector<ModCatDatum> dedupe(const std::vector<ModCatDatum>& data, bool strict) {
  std::set<std::string> seen;
  std::vector<ModCatDatum> out;
  for (const auto& m : data)
    if (seen.insert(datum_key(m, strict)).second) out.push_back(m);
  return out;
}

ClassificationReport classification_report(const QlsDatum& d, const std::vector<ModCatDatum>& data,
                                           const ClassificationOptions& opt) {
  const auto ctx = make_context(d);
  const int conductor = opt.conductor > 0 ? opt.conductor : d.exponent();

  struct Cell {
    std::vector<int> order;
    std::string psi, W;
    std::vector<const ModCatDatum*> members;
  };
  std::map<std::tuple<std::vector<int>, std::string, std::string>, Cell> cells;
  for (const auto& m : data) {
    auto& c = cells[{subgroup_sort_key(m.F()), psi_key(m.psi, opt.strict_cocycle), W_to_string(m.W)}];
    c.members.push_back(&m);
  }

  ClassificationReport rep;
  rep.datum = d.group().to_string() + " theta=" + std::to_string(d.theta());
  std::vector<std::future<ClassificationRow>> jobs;
  for (auto& [key, cell] : cells) {
    std::vector<const ModCatDatum*> members = cell.members;
    std::sort(members.begin(), members.end(), [&](const ModCatDatum* a, const ModCatDatum* b) {
      return datum_key(*a, opt.strict_cocycle) < datum_key(*b, opt.strict_cocycle);
    });
    jobs.push_back(std::async(std::launch::async, [&ctx, &opt, conductor, members]() {
      const ModCatDatum& first = *members.front();
      ClassificationRow row;
      row.F = subgroup_key(first.F());
      row.psi_class = psi_key(first.psi, opt.strict_cocycle);
      row.W = W_to_string(first.W);
      row.general_W = !is_coordinate(first.W);
      row.free_params = free_positions(*ctx, first.psi, first.W).count();
      for (const ModCatDatum* m : members) {
        RepresentativeInfo info{*m, 0, Simplicity::Undecided, 0, {}};
        const ComoduleAlgebraRep A = build_A(*ctx, *m);
        info.dim = A.dim();
        info.verdict = check_simplicity(A, conductor, opt.seed).verdict;
        info.coinvariants = coinvariants(A).size();
        info.modules = simple_modules(A.alg, conductor, opt.seed);
        row.dim = info.dim;
        row.reps.push_back(std::move(info));
      }
      return row;
    }));
  }
  for (auto& j : jobs) {
    rep.rows.push_back(j.get());
    rep.total += rep.rows.back().reps.size();
    if (rep.rows.back().general_W)
      rep.notes.push_back("row " + std::to_string(rep.rows.size()) +
                          ": W is user-registered; data related by an F-equivariant automorphism of V are listed "
                          "separately and may or may not be equivalent");
  }
  return rep;
}

ClassificationReport classification_report(const QlsDatum& d, const ClassificationOptions& opt) {
  return classification_report(
      d, dedupe(enumerate_modcat_data(d, opt.sample, opt.max_group_order, opt.extra_W), opt.strict_cocycle), opt);
}

namespace {

// Clifford monomials are bitmasks over w_1..w_s (increasing products).
using Clifford = std::map<unsigned, CycloNumber>;

struct CliffordForm {
  int s = 0;
  std::vector<std::vector<CycloNumber>> beta;

  void add(Clifford& out, unsigned mask, const CycloNumber& c) const {
    auto& v = out[mask];
    v += c;
    if (v.is_zero()) out.erase(mask);
  }

  // w_A * w_j.
  Clifford times_gen(unsigned A, int j) const {
    Clifford out;
    if (A == 0) {
      out[1u << j] = CycloNumber(1L);
      return out;
    }
    int last = 31 - __builtin_clz(A);
    const unsigned rest = A & ~(1u << last);
    if (last < j) {
      out[A | (1u << j)] = CycloNumber(1L);
    } else if (last == j) {
      if (!beta[j][j].is_zero()) out[rest] = beta[j][j];
    } else {
      // w_rest w_last w_j = -(w_rest w_j) w_last + 2 beta(last, j) w_rest
      for (const auto& [m, c] : times_gen(rest, j)) add(out, m | (1u << last), -c);
      if (!beta[last][j].is_zero()) add(out, rest, CycloNumber(2L) * beta[last][j]);
    }
    return out;
  }

  Clifford multiply(unsigned A, unsigned B) const {
    Clifford cur{{A, CycloNumber(1L)}};
    for (int j = 0; j < s; ++j) {
      if (!(B >> j & 1)) continue;
      Clifford next;
      for (const auto& [m, c] : cur)
        for (const auto& [m2, c2] : times_gen(m, j)) add(next, m2, c * c2);
      cur = std::move(next);
    }
    return cur;
  }
};

}  // namespace

ComoduleAlgebraRep clifford_smash(const QlsContext& ctx, const ModCatDatum& m) {
  const QlsDatum& d = ctx.datum;
  const Subgroup& F = m.F();
  const int s = static_cast<int>(m.W.size());
  const int nf = F.size();
  if (s > 16) throw Error(ErrorKind::SizeBound, "W too large for the Clifford construction");
  CliffordForm form;
  form.s = s;
  form.beta.assign(s, std::vector<CycloNumber>(s));
  for (int k = 0; k < s; ++k) {
    form.beta[k][k] = m.xi[k];
    for (int l = k + 1; l < s; ++l) form.beta[k][l] = form.beta[l][k] = m.a(k, l) / CycloNumber(2L);
  }
  // F acts on w_k by a character read off any coordinate of w_k.
  std::vector<std::vector<CycloNumber>> act(s, std::vector<CycloNumber>(nf));
  std::vector<int> gdeg(s);
  for (int k = 0; k < s; ++k) {
    if (m.W[k].empty()) throw Error(ErrorKind::ValidationFailed, "zero vector in W");
    const int i0 = static_cast<int>(m.W[k].leading());
    gdeg[k] = d.g(i0);
    for (const auto& [i, c] : m.W[k])
      for (int f = 0; f < nf; ++f) {
        const CycloNumber v = d.chi(static_cast<int>(i))(F.element(f));
        if (d.g(static_cast<int>(i)) != gdeg[k] || v != d.chi(i0)(F.element(f)))
          throw Error(ErrorKind::ValidationFailed, "W basis vector is not a homogeneous F-eigenvector");
        act[k][f] = v;
      }
  }

  const unsigned M = 1u << s;
  const std::size_t n = static_cast<std::size_t>(M) * nf;
  ComoduleAlgebraRep C;
  C.name = "Cl#kF";
  C.hopf = ctx.U;
  auto& alg = C.alg;
  alg.dim = n;
  const auto glab = group_labels(d.group(), "e");
  for (unsigned A = 0; A < M; ++A)
    for (int f = 0; f < nf; ++f) {
      std::string l;
      for (int k = 0; k < s; ++k)
        if (A >> k & 1) l += "w" + std::to_string(k + 1);
      alg.labels.push_back((l.empty() ? "" : l + "*") + glab[F.element(f)]);
      C.degree.push_back(__builtin_popcount(A));
    }
  alg.unit = Vec::unit(0);
  alg.mult.resize(n * n);
  for (unsigned A = 0; A < M; ++A)
    for (unsigned B = 0; B < M; ++B) {
      const Clifford ab = form.multiply(A, B);
      for (int f = 0; f < nf; ++f) {
        CycloNumber twist(1L);
        for (int k = 0; k < s; ++k)
          if (B >> k & 1) twist *= act[k][f];
        for (int g = 0; g < nf; ++g) {
          const CycloNumber c = twist * m.psi.at(f, g);
          const int fg = F.mul_local(f, g);
          Accumulator<CycloNumber> acc;
          for (const auto& [mask, v] : ab) acc.add(static_cast<std::size_t>(mask) * nf + fg, c * v);
          alg.mult[(static_cast<std::size_t>(A) * nf + f) * n + static_cast<std::size_t>(B) * nf + g] = acc.finish();
        }
      }
    }

  const Algebra& U = ctx.U->alg;
  std::vector<Vec> lgen(s);
  for (int k = 0; k < s; ++k)
    lgen[k] = tensor(ctx.x_of(m.W[k]), alg.unit, n) + tensor(ctx.group(gdeg[k]), Vec::unit((1u << k) * nf), n);
  C.coaction.resize(n);
  for (unsigned A = 0; A < M; ++A) {
    Vec t = tensor(U.unit, alg.unit, n);
    for (int k = 0; k < s; ++k)
      if (A >> k & 1) t = tensor_multiply(U, alg, t, lgen[k]);
    for (int f = 0; f < nf; ++f)
      C.coaction[static_cast<std::size_t>(A) * nf + f] =
          tensor_multiply(U, alg, t, tensor(ctx.group(F.element(f)), Vec::unit(f), n));
  }
  return C;
}

CliffordCheck exterior_clifford_check(const QlsDatum& d, const ModCatDatum& m) {
  const AbelianGroup& G = d.group();
  if (d.theta() == 0) throw Error(ErrorKind::NotExteriorDatum, "theta = 0");
  const int u = d.g(0);
  for (int i = 0; i < d.theta(); ++i)
    if (d.g(i) != u || G.element_order(u) != 2 || d.chi(i)(u) != CycloNumber(-1L))
      throw Error(ErrorKind::NotExteriorDatum, "need g_i = u of order 2 and chi_i(u) = -1 for every i");
  const auto ctx = make_context(d);
  CliffordCheck out;
  const ComoduleAlgebraRep A = build_A(*ctx, m);
  const ComoduleAlgebraRep C = clifford_smash(*ctx, m);
  out.dim = A.dim();
  if (auto ax = verify_comodule_algebra(C); !ax.ok()) {
    out.detail = "Cl(W,beta)#k_psi F is not a comodule algebra:\n" + ax.summary();
    return out;
  }
  const int s = static_cast<int>(m.W.size());
  const std::size_t nf = static_cast<std::size_t>(m.F().size());
  std::vector<Vec> gens, groups;
  for (int k = 0; k < s; ++k) gens.push_back(Vec::unit((std::size_t{1} << k) * nf));
  for (std::size_t f = 0; f < nf; ++f) groups.push_back(Vec::unit(f));
  const auto phi = generator_map(A, gens, groups, C.alg);
  if (auto why = check_isomorphism(A, C, phi)) {
    out.detail = *why;
    return out;
  }
  out.pass = true;
  out.detail = "generator map is a comodule algebra isomorphism";
  return out;
}

}  // namespace qlsmodcat

#include "magic/construct.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "magic/errors.hpp"

namespace magic {

std::string to_string(ConstructStatus s) {
  switch (s) {
    case ConstructStatus::Found: return "found";
    case ConstructStatus::Absent: return "absent";
    case ConstructStatus::Undecided: return "undecided";
  }
  return "undecided";
}

namespace {

using Program = ConstructionTrace;
using Params = std::map<std::string, Label>;

Program assign(std::string rule, Space space, std::vector<EdgeSet> factors,
               std::vector<Label> values, Params params = {}) {
  // Empty factors carry no labels; drop them to keep traces short.
  TraceStep s;
  s.rule = std::move(rule);
  s.op = TraceOp::Assign;
  s.space = space;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].empty()) continue;
    s.factors.push_back(std::move(factors[i]));
    s.values.push_back(values[i]);
  }
  s.params = std::move(params);
  Program p;
  p.steps.push_back(std::move(s));
  return p;
}

Program with_op(Program p, TraceOp op, std::string rule) {
  TraceStep s;
  s.rule = std::move(rule);
  s.op = op;
  p.steps.push_back(std::move(s));
  return p;
}

Program combine(Program a, const Program& b, TraceOp op, std::string rule) {
  a.append(b);
  return with_op(std::move(a), op, std::move(rule));
}

Program fold_step(Program p, int divisor, Label offset, std::string rule) {
  TraceStep s;
  s.rule = std::move(rule);
  s.op = TraceOp::Fold;
  s.divisor = divisor;
  s.offset = offset;
  p.steps.push_back(std::move(s));
  return p;
}

EdgeSet merge_parts(const std::vector<EdgeSet>& parts, std::size_t from, std::size_t to) {
  EdgeSet out;
  for (std::size_t i = from; i < to && i < parts.size(); ++i) {
    out.insert(out.end(), parts[i].begin(), parts[i].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeSet all_edges(const MultiGraph& g) {
  EdgeSet out(g.size());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

Label gcd_of(Label a, Label b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

class Builder {
 public:
  Builder(std::int64_t k, const ConstructOptions& opts) : k_(k), opts_(opts) {}

  const Program& log() const { return log_; }

  // Any regular graph, component by component.
  std::optional<Program> any(const MultiGraph& g, Label c, int depth) {
    if (depth > 8) return std::nullopt;
    const auto r = regularity(g);
    if (!r || *r < 1) return std::nullopt;
    if (depth > 0 && !predicted(g, c)) return std::nullopt;
    const auto comps = components(g);
    if (comps.size() == 1) return connected(g, *r, c, depth);
    std::optional<Program> total;
    for (const auto& comp : comps) {
      const auto sub = induced_subgraph(g, comp);
      auto p = connected(sub.graph, *r, c, depth);
      if (!p) return std::nullopt;
      Program mapped = remap_trace(*p, sub.edge_map, g.size());
      total = total ? combine(std::move(*total), mapped, TraceOp::Merge, "union of components")
                    : std::move(mapped);
    }
    return total;
  }

 private:
  Label md(Label v) const { return reduce(v, k_); }

  bool predicted(const MultiGraph& g, Label c) {
    const auto s = predict_spectrum(g, k_, opts_.predict);
    if (s.contains(c)) return true;
    return std::find(s.undecided.begin(), s.undecided.end(), md(c)) != s.undecided.end();
  }

  bool works(const MultiGraph& g, const Program& p, Label c) const {
    try {
      const auto labeling = replay(g, k_, p);
      const auto sum = verify(g, labeling);
      return sum && *sum == md(c);
    } catch (const InvalidInput&) {
      return false;
    }
  }

  // Per-graph lazily computed factor data.
  struct Context {
    const MultiGraph& g;
    int r;
    std::optional<DoublingMap> doubling;
    std::optional<FactorDecomposition> doubled_two;  // 2-factors of G'
    std::optional<FactorDecomposition> two;          // 2-factors of G (r even)

    const DoublingMap& dm() {
      if (!doubling) doubling = double_graph(g);
      return *doubling;
    }
    const FactorDecomposition& dtwo() {
      if (!doubled_two) doubled_two = two_factorization(dm().doubled);
      return *doubled_two;
    }
    const FactorDecomposition& gtwo() {
      if (!two) two = two_factorization(g);
      return *two;
    }
  };

  std::optional<Program> connected(const MultiGraph& g, int r, Label c, int depth) {
    Context ctx{g, r, {}, {}, {}};
    Program notes;
    auto accept = [&](std::optional<Program> p) -> std::optional<Program> {
      if (!p) return std::nullopt;
      if (works(g, *p, c)) {
        Program out = notes;
        out.append(*p);
        return out;
      }
      const std::string rule = p->steps.empty() ? "rule" : p->steps.back().rule;
      notes.note("fell through: " + rule + " produced no valid labeling", {{"c", c}});
      return std::nullopt;
    };
    using Rule = std::optional<Program> (Builder::*)(Context&, Label, int);
    const Rule rules[] = {
        &Builder::one_regular,      &Builder::two_regular,    &Builder::constant,
        &Builder::zero_sum,         &Builder::odd_regular,    &Builder::even_regular,
        &Builder::four_magic,       &Builder::three_magic,    &Builder::two_factor_sums,
        &Builder::integer_matching, &Builder::factor_pair,    &Builder::solver,
    };
    for (Rule rule : rules) {
      std::optional<Program> p;
      try {
        p = (this->*rule)(ctx, c, depth);
      } catch (const BudgetExceeded& e) {
        notes.note(std::string("budget exceeded: ") + e.what());
        continue;
      }
      if (auto ok = accept(std::move(p))) return ok;
    }
    log_.append(notes);
    return std::nullopt;
  }

  // Labels of a 2-regular graph with sum t: even cycles alternate x and
  // t - x, odd cycles take x with 2x = t.
  std::optional<Program> cycle_program(const MultiGraph& g, Label t) const {
    const auto profile = two_regular_profile(g);
    EdgeSet alt_a, alt_b, odd;
    for (const auto& cyc : profile.cycles) {
      if (cyc.length() % 2 == 0) {
        for (int i = 0; i < cyc.length(); ++i) (i % 2 == 0 ? alt_a : alt_b).push_back(cyc.edges[i]);
      } else {
        odd.insert(odd.end(), cyc.edges.begin(), cyc.edges.end());
      }
    }
    Label x = 0, y = 0;
    if (!alt_a.empty()) {
      if (k_ == 1) {
        x = t == 1 ? 2 : 1;
      } else {
        for (Label v = 1; v < k_ && x == 0; ++v)
          if (md(t - v) != 0) x = v;
        if (x == 0) return std::nullopt;
      }
    }
    if (!odd.empty()) {
      if (k_ == 1) {
        if (t == 0 || t % 2 != 0) return std::nullopt;
        y = t / 2;
      } else {
        for (Label v = 1; v < k_ && y == 0; ++v)
          if (md(2 * v) == md(t)) y = v;
        if (y == 0) return std::nullopt;
      }
    }
    std::sort(alt_a.begin(), alt_a.end());
    std::sort(alt_b.begin(), alt_b.end());
    std::sort(odd.begin(), odd.end());
    return assign("2-regular: even cycles alternate x and c - x, odd cycles constant y with 2y = c",
                  Space::Graph, {alt_a, alt_b, odd}, {x, t - x, y}, {{"c", t}, {"x", x}, {"y", y}});
  }

  // Program for a labeling of the spanning subgraph `edges` of g, rewritten
  // into g's edge ids.
  Program lift(const MultiGraph& g, const EdgeSet& edges, const Program& sub) const {
    return remap_trace(sub, edges, g.size());
  }

  std::optional<Program> doubling(Context& ctx, int h, Label a, Label b, int divisor, Label offset,
                                  const std::string& rule) {
    const auto& parts = ctx.dtwo().parts;
    EdgeSet first = merge_parts(parts, 0, h);
    EdgeSet rest = merge_parts(parts, h, parts.size());
    Program p = assign(rule, Space::Doubled, {first, rest}, {a, b},
                       {{"h", h}, {"a", a}, {"b", b}, {"divisor", divisor}});
    return fold_step(std::move(p), divisor, offset, rule + ": fold");
  }

  // Labels the factor `factor` of g with a recursively built labeling of sum
  // c - (r - h) and every other edge with 1.
  std::optional<Program> extension(Context& ctx, const EdgeSet& factor, Label c, int depth,
                                   const std::string& rule) {
    if (k_ == 2) return std::nullopt;
    const MultiGraph sub = spanning_subgraph(ctx.g, factor);
    const auto h = regularity(sub);
    if (!h || *h < 2) return std::nullopt;
    const Label alpha = md(c - (ctx.r - *h));
    auto inner = any(sub, alpha, depth + 1);
    if (!inner) return std::nullopt;
    Program p = lift(ctx.g, factor, *inner);
    const EdgeSet rest = complement_edges(ctx.g, factor);
    if (rest.empty()) return p;
    return combine(std::move(p),
                   assign(rule, Space::Graph, {rest}, {1}, {{"h", *h}, {"alpha", alpha}}),
                   TraceOp::Merge, rule);
  }

  std::optional<Program> one_regular(Context& ctx, Label c, int) {
    if (ctx.r != 1 || md(c) == 0) return std::nullopt;
    return assign("1-regular: constant label c", Space::Graph, {all_edges(ctx.g)}, {c});
  }

  std::optional<Program> two_regular(Context& ctx, Label c, int) {
    if (ctx.r != 2) return std::nullopt;
    return cycle_program(ctx.g, c);
  }

  std::optional<Program> constant(Context& ctx, Label c, int) {
    if (k_ >= 3 && md(c) == 0) return std::nullopt;  // zero sums go to zero_sum
    Label x = 0;
    if (k_ == 1) {
      if (c == 0 || c % ctx.r != 0) return std::nullopt;
      x = c / ctx.r;
    } else {
      for (Label v = 1; v < k_ && x == 0; ++v)
        if (md(ctx.r * v) == md(c)) x = v;
      if (x == 0) return std::nullopt;
    }
    const std::string rule = (k_ >= 2 && gcd_of(ctx.r, k_) == 1)
                                 ? "gcd(r, k) = 1: constant label c * r^-1"
                                 : "constant label x with r * x = c";
    return assign(rule, Space::Graph, {all_edges(ctx.g)}, {x}, {{"x", x}});
  }

  std::optional<Program> zero_sum(Context& ctx, Label c, int) {
    if (k_ < 3 || md(c) != 0 || ctx.r < 3) return std::nullopt;
    const int r = ctx.r;
    if (r % 2 == 0) {
      // Constant x_i on the i-th 2-factor with 2 * sum(x_i) = 0.
      const auto& parts = ctx.gtwo().parts;
      const Label s = static_cast<Label>(parts.size());
      for (Label x1 = 1; x1 < k_; ++x1) {
        for (Label x2 = 1; x2 < k_; ++x2) {
          if (md(2 * (x1 + x2 + (s - 2))) != 0) continue;
          std::vector<Label> values(parts.size(), 1);
          values[0] = x1;
          values[1] = x2;
          return assign("zero-sum, r even: constant x_i on each 2-factor, 2 * sum x_i = 0",
                        Space::Graph, parts, values, {{"x1", x1}, {"x2", x2}});
        }
      }
      return std::nullopt;
    }
    if (r == 5 && k_ >= 5 && k_ != 8) {
      auto p = doubling(ctx, 1, k_ - 4, 1, 1, 0,
                        "5-regular zero-sum: 2-factor of G' labeled k - 4, 8-factor labeled 1");
      if (works(ctx.g, *p, 0)) return p;
    }
    if (r == 5 && k_ == 8) {
      auto p = doubling(ctx, 2, 2, 4, 2, 0,
                        "5-regular zero-sum, k = 8: 4-factor of G' labeled 2, 6-factor labeled 4, halved");
      if (works(ctx.g, *p, 0)) return p;
    }
    if (k_ == 4) {
      if (r % 4 != 3) return std::nullopt;
      const auto matching = f_factor(ctx.g, 1, opts_.predict.factors);
      if (!matching) return std::nullopt;
      return assign("zero-sum over Z_4, r = 3 (mod 4): perfect matching 2, rest 1", Space::Graph,
                    {*matching, complement_edges(ctx.g, *matching)}, {2, 1});
    }
    // Parametric doubling: a 2h-factor of G' labeled a, the rest b.
    for (int h = 1; h <= r; ++h) {
      for (int divisor : {1, 2}) {
        for (Label a = 1; a < k_; ++a) {
          for (Label b = 1; b < k_; ++b) {
            if (h == r && b != a) continue;
            const Label total = divisor == 1 ? 2 * h * a + 2 * (r - h) * b : h * a + (r - h) * b;
            if (md(total) != 0) continue;
            if (divisor == 2 && (a + b) % 2 != 0 && h < r) continue;
            auto p = doubling(ctx, h, a, b, divisor, 0,
                              "zero-sum, r odd: parametric doubling search");
            if (works(ctx.g, *p, 0)) return p;
          }
        }
      }
    }
    return std::nullopt;
  }

  // Odd r >= 3, k >= 5, c != 0 with gcd(r, k) = d > 1 (gcd 1 is handled by
  // the constant rule).
  std::optional<Program> odd_regular(Context& ctx, Label c, int) {
    const int r = ctx.r;
    if (k_ < 5 || r < 3 || r % 2 == 0 || md(c) == 0) return std::nullopt;
    const Label d = gcd_of(r, k_);
    const Label b = k_ / d;
    if (k_ % 2 == 1) {
      auto generic = [&](Label t) -> std::optional<Program> {
        if (t == md(k_ - b) || t == md(k_ - 2 * b) || t == 0) return std::nullopt;
        const Label x = t % 2 == 1 ? (b + t) / 2 : (b + t + k_) / 2;
        return doubling(ctx, 1, md(x), (k_ + b) / 2, 1, 0,
                        "odd r, odd k: 2-factor of G' labeled x, rest (k + b) / 2");
      };
      if (auto p = generic(md(c)); p && works(ctx.g, *p, c)) return p;
      if (k_ != 3 * b) {
        if (auto p = generic(md(k_ - c)); p && works(ctx.g, *p, k_ - c)) {
          return with_op(std::move(*p), TraceOp::Complement, "complement: k - l(e)");
        }
      }
      if (k_ == 3 * b) {
        // Sum k - 2b from 2-factors J1, J2 of G' and the rest.
        const auto& parts = ctx.dtwo().parts;
        if (parts.size() < 3) return std::nullopt;
        Program p = assign("odd r, k = 3b: J1 labeled (b+1)/2, J2 labeled (b-1)/2, rest b",
                           Space::Doubled,
                           {parts[0], parts[1], merge_parts(parts, 2, parts.size())},
                           {(b + 1) / 2, (b - 1) / 2, b}, {{"b", b}});
        p = fold_step(std::move(p), 1, 0, "odd r, k = 3b: fold");
        if (md(c) == md(k_ - 2 * b)) return p;
        if (md(c) == md(k_ - b)) return with_op(std::move(p), TraceOp::Complement, "complement: k - l(e)");
      }
      return std::nullopt;
    }
    // Even k: 2-factor of G' labeled t, rest 1. Even c folds by sum, odd c
    // by half sum.
    const Label r0 = md(r - 1);
    auto even_k = [&](Label target) -> std::optional<Program> {
      if (target % 2 == 0) {
        for (Label t : {md(target / 2 - r0), md(target / 2 + k_ / 2 - r0)}) {
          if (t == 0) continue;
          auto p = doubling(ctx, 1, t, 1, 1, 0, "odd r, even k, even c: 2-factor of G' labeled t, rest 1");
          if (works(ctx.g, *p, target)) return p;
        }
        return std::nullopt;
      }
      const Label t = md(target - r0);
      if (t == 0 || t % 2 == 0) return std::nullopt;
      auto p = doubling(ctx, 1, t, 1, 2, 0,
                        "odd r, even k, odd c: 2-factor of G' labeled c - r0, rest 1, halved");
      if (works(ctx.g, *p, target)) return p;
      return std::nullopt;
    };
    if (auto p = even_k(md(c))) return p;
    if (auto p = even_k(md(k_ - c))) {
      return with_op(std::move(*p), TraceOp::Complement, "complement: k - l(e)");
    }
    return std::nullopt;
  }

  std::optional<Program> even_regular(Context& ctx, Label c, int depth) {
    const int r = ctx.r;
    if (k_ < 5 || r < 4 || r % 2 != 0) return std::nullopt;
    if (ctx.g.order() % 2 == 1) return two_factor_sums(ctx, c, depth);
    const int rho = r / 2;
    if (rho == 2) {
      if (k_ % 2 == 1) return std::nullopt;  // gcd(4, k) = 1: constant rule
      const Label d = k_ / 2;
      const auto& two = ctx.gtwo().parts;
      if (md(c) == d) {
        if (d % 2 == 0) {
          return assign("4-regular, k = 2d, d even: 2-factors labeled d and d/2", Space::Graph,
                        {two[0], two[1]}, {d, d / 2}, {{"d", d}});
        }
        const auto three = f_factor(ctx.dm().doubled, 3, opts_.predict.factors);
        if (!three) return std::nullopt;
        const EdgeSet rest = complement_edges(ctx.dm().doubled, *three);
        if (d == 3 || d == 9) {
          const Label x = d == 3 ? 1 : 3;
          Program p = assign("4-regular, k = 2d, d in {3, 9}: 3-factor of G' labeled 2x, rest 1",
                             Space::Doubled, {*three, rest}, {2 * x, 1}, {{"d", d}, {"x", x}});
          return fold_step(std::move(p), 1, 1, "4-regular, d in {3, 9}: fold plus 1");
        }
        Program f = assign("4-regular, k = 2d, d odd: 2-factors labeled d + 1 and (k - d - 1)/2",
                           Space::Graph, {two[0], two[1]}, {d + 1, (k_ - d - 1) / 2}, {{"d", d}});
        Program g = assign("4-regular, k = 2d, d odd: 3-factor of G' labeled k - 2, rest 1",
                           Space::Doubled, {*three, rest}, {k_ - 2, 1});
        g = fold_step(std::move(g), 1, 0, "4-regular, d odd: fold");
        return combine(std::move(f), g, TraceOp::Add, "4-regular, d odd: sum of (d+1)- and (k-1)-sum labelings");
      }
      const auto three = f_factor(ctx.dm().doubled, 3, opts_.predict.factors);
      if (!three) return std::nullopt;
      const EdgeSet rest = complement_edges(ctx.dm().doubled, *three);
      auto f_c = [&](Label t) {
        Program p = assign("4-regular, even k: 3-factor of G' labeled 2c, 5-factor labeled k - c",
                           Space::Doubled, {*three, rest}, {2 * t, k_ - t}, {{"c", t}});
        return fold_step(std::move(p), 1, 0, "4-regular, even k: fold");
      };
      if (auto p = f_c(md(c)); works(ctx.g, p, c)) return p;
      auto q = f_c(md(k_ - c));
      return with_op(std::move(q), TraceOp::Complement, "complement: k - l(e)");
    }
    if (rho % 2 == 1) {
      const auto half = f_factor(ctx.g, rho, opts_.predict.factors);
      if (!half) return std::nullopt;
      return extension(ctx, *half, c, depth, "2r-regular, r odd, even order: r-factor extended by 1");
    }
    const auto six = extract_2h_factor(ctx.g, 3).parts[0];
    return extension(ctx, six, c, depth, "2r-regular, r even: 6-factor extended by 1");
  }

  std::optional<Program> four_magic(Context& ctx, Label c, int depth) {
    const int r = ctx.r;
    if (k_ != 4 || md(c) == 0 || r < 4 || r % 2 != 0) return std::nullopt;
    const auto& two = ctx.gtwo().parts;
    if (ctx.g.order() % 2 == 1 || md(c) == 2) {
      if (md(c) != 2) return std::nullopt;
      if (ctx.g.order() % 2 == 1) {
        return assign("k = 4, odd order: first 2-factor labeled 1, the others 2", Space::Graph,
                      {two[0], merge_parts(two, 1, two.size())}, {1, 2});
      }
      if (r == 4) {
        return assign("k = 4, 4-regular: 2-factors labeled 2 and 1", Space::Graph, {two[0], two[1]},
                      {2, 1});
      }
      return two_factor_sums(ctx, c, depth);
    }
    const int x = r / 2;
    if (x % 2 == 1) {
      const auto half = f_factor(ctx.g, x, opts_.predict.factors);
      if (!half) return std::nullopt;
      const EdgeSet rest = complement_edges(ctx.g, *half);
      for (Label a = 1; a < 4; ++a)
        for (Label b = 1; b < 4; ++b)
          if (md(x * a + x * b) == md(c)) {
            return assign("k = 4, r = 2x, x odd: two x-factors with constant labels", Space::Graph,
                          {*half, rest}, {a, b}, {{"a", a}, {"b", b}});
          }
      return std::nullopt;
    }
    if (x == 2) {
      const auto five = f_factor(ctx.dm().doubled, 5, opts_.predict.factors);
      if (!five) return std::nullopt;
      Program p = assign("k = 4, 4-regular: 5-factor of G' labeled 1, 3-factor labeled 3",
                         Space::Doubled, {*five, complement_edges(ctx.dm().doubled, *five)}, {1, 3});
      p = fold_step(std::move(p), 2, 0, "k = 4, 4-regular: fold, halved");
      if (works(ctx.g, p, c)) return p;
      return with_op(std::move(p), TraceOp::Complement, "complement: k - l(e)");
    }
    // Split into a 6-factor and its complement; sums add.
    const EdgeSet six = extract_2h_factor(ctx.g, 3).parts[0];
    const EdgeSet rest = complement_edges(ctx.g, six);
    const MultiGraph h1 = spanning_subgraph(ctx.g, six);
    const MultiGraph h2 = spanning_subgraph(ctx.g, rest);
    for (Label t1 : {1, 2, 3, 0}) {
      auto p1 = any(h1, t1, depth + 1);
      if (!p1) continue;
      auto p2 = any(h2, md(c - t1), depth + 1);
      if (!p2) continue;
      return combine(lift(ctx.g, six, *p1), lift(ctx.g, rest, *p2), TraceOp::Merge,
                     "k = 4: 6-factor and complement labeled separately");
    }
    return std::nullopt;
  }

  std::optional<Program> three_magic(Context& ctx, Label c, int depth) {
    const int r = ctx.r;
    if (k_ != 3 || r < 3) return std::nullopt;
    if (md(c) == 0 || r % 3 != 0) return factor_pair(ctx, c, depth);
    if (r % 6 == 0) {
      const EdgeSet four = extract_2h_factor(ctx.g, 2).parts[0];
      return extension(ctx, four, c, depth, "k = 3, r = 0 (mod 6): 4-factor extended by 1");
    }
    const auto h = mod3_factor(ctx.g, opts_.predict.factors);
    if (!h) return std::nullopt;
    Program p = assign("k = 3, r = 3 (mod 6): factor with degrees 1 (mod 3) labeled 2, rest 1",
                       Space::Graph, {*h, complement_edges(ctx.g, *h)}, {2, 1});
    if (md(c) == 1) return p;
    return with_op(std::move(p), TraceOp::Complement, "complement: k - l(e)");
  }

  // A factor H labeled a, the rest b: vertex sums are b*r + (a - b)*d_H(v),
  // which fixes d_H(v) modulo k / gcd(a - b, k).
  std::optional<Program> factor_pair(Context& ctx, Label c, int) {
    if (k_ < 3 || ctx.r < 2) return std::nullopt;
    std::set<std::pair<int, int>> tried;
    for (Label b = 1; b < k_; ++b) {
      for (Label a = 1; a < k_; ++a) {
        if (a == b) continue;
        const Label delta = md(a - b), need = md(c - b * ctx.r);
        const Label g = gcd_of(delta, k_);
        if (need % g != 0) continue;
        const Label mod = k_ / g;
        Label residue = 0;
        while (md(delta * residue - need) != 0) ++residue;  // residue < mod exists
        if (!tried.insert({static_cast<int>(residue), static_cast<int>(mod)}).second) continue;
        const auto h = congruence_factor(ctx.g, static_cast<int>(residue), static_cast<int>(mod),
                                         opts_.predict.factors);
        if (!h || h->empty()) continue;
        Program p = assign("factor with degrees fixed mod k / gcd(a - b, k) labeled a, rest b",
                           Space::Graph, {*h, complement_edges(ctx.g, *h)}, {a, b},
                           {{"a", a}, {"b", b}, {"residue", residue}, {"modulus", mod}});
        if (works(ctx.g, p, c)) return p;
      }
    }
    return std::nullopt;
  }

  // Even r: a cycle labeling of sum t_i on each 2-factor, sum of t_i = c.
  std::optional<Program> two_factor_sums(Context& ctx, Label c, int) {
    if (ctx.r < 4 || ctx.r % 2 != 0) return std::nullopt;
    const auto& parts = ctx.gtwo().parts;
    const std::size_t s = parts.size();
    std::vector<MultiGraph> subs;
    for (const auto& p : parts) subs.push_back(spanning_subgraph(ctx.g, p));

    std::vector<Label> sums(s, 0);
    if (k_ == 1) {
      for (std::size_t i = 2; i < s; ++i) sums[i] = 2;
      const Label fixed = 2 * static_cast<Label>(s >= 2 ? s - 2 : 0);
      bool found = false;
      for (Label t2 : {2, -2, 4, -4, 1, -1, 3, -3, 6, -6}) {
        sums[1] = t2;
        sums[0] = c - fixed - t2;
        if (cycle_program(subs[0], sums[0]) && cycle_program(subs[1], sums[1])) {
          found = true;
          break;
        }
      }
      if (!found) return std::nullopt;
    } else {
      std::vector<std::vector<Label>> allowed(s);
      for (std::size_t i = 0; i < s; ++i)
        for (Label t = 0; t < k_; ++t)
          if (cycle_program(subs[i], t)) allowed[i].push_back(t);
      // reach[i][v]: factors i..s-1 can sum to v.
      std::vector<std::vector<char>> reach(s + 1, std::vector<char>(k_, 0));
      reach[s][0] = 1;
      for (std::size_t i = s; i-- > 0;)
        for (Label t : allowed[i])
          for (Label v = 0; v < k_; ++v)
            if (reach[i + 1][v]) reach[i][md(v + t)] = 1;
      Label want = md(c);
      if (!reach[0][want]) return std::nullopt;
      for (std::size_t i = 0; i < s; ++i) {
        for (Label t : allowed[i]) {
          if (reach[i + 1][md(want - t)]) {
            sums[i] = t;
            want = md(want - t);
            break;
          }
        }
      }
    }
    std::optional<Program> total;
    for (std::size_t i = 0; i < s; ++i) {
      auto p = cycle_program(subs[i], sums[i]);
      Program mapped = lift(ctx.g, parts[i], *p);
      total = total ? combine(std::move(*total), mapped, TraceOp::Merge,
                              "2-factors labeled with sums adding to c")
                    : std::move(mapped);
    }
    return total;
  }

  std::optional<Program> integer_matching(Context& ctx, Label c, int) {
    if (k_ != 1 || ctx.r < 3) return std::nullopt;
    const auto matching = f_factor(ctx.g, 1, opts_.predict.factors);
    if (!matching) return std::nullopt;
    for (Label x : {1, -1, 2, -2, 3, -3}) {
      const Label y = c - (ctx.r - 1) * x;
      if (y == 0) continue;
      return assign("integers: perfect matching labeled c - (r - 1)x, rest x", Space::Graph,
                    {*matching, complement_edges(ctx.g, *matching)}, {y, x}, {{"x", x}});
    }
    return std::nullopt;
  }

  std::optional<Program> solver(Context& ctx, Label c, int) {
    if (!opts_.solver_fallback) return std::nullopt;
    const auto found = solve_labeling(ctx.g, k_, c, opts_.predict.budget);
    if (!found) return std::nullopt;
    std::map<Label, EdgeSet> by_value;
    for (EdgeId e = 0; e < ctx.g.size(); ++e) by_value[found->labels[e]].push_back(e);
    std::vector<EdgeSet> factors;
    std::vector<Label> values;
    for (auto& [v, edges] : by_value) {
      values.push_back(v);
      factors.push_back(std::move(edges));
    }
    return assign("exhaustive solver", Space::Graph, std::move(factors), std::move(values));
  }

  std::int64_t k_;
  const ConstructOptions& opts_;
  Program log_;
};

}  // namespace

ConstructResult construct(const MultiGraph& g, std::int64_t k, Label c, const ConstructOptions& opts) {
  if (k < 1) throw InvalidInput("k must be positive");
  const auto r = regularity(g);
  if (!r) throw InvalidInput("construct needs a regular graph");
  if (*r < 1) throw InvalidInput("construct needs at least one edge per vertex");
  if (k >= 2 && (c < 0 || c >= k)) throw InvalidInput("c must lie in [0, k)");

  ConstructResult out;
  const SpectrumSet predicted = predict_spectrum(g, k, opts.predict);
  const bool open = std::find(predicted.undecided.begin(), predicted.undecided.end(), c) !=
                    predicted.undecided.end();
  if (!predicted.contains(c) && !open) {
    out.status = ConstructStatus::Absent;
    for (const auto& why : predicted.provenance) out.trace.note("excluded: " + why, {{"c", c}});
    return out;
  }

  Builder builder(k, opts);
  auto program = builder.any(g, c, 0);
  if (!program) {
    out.status = ConstructStatus::Undecided;
    out.trace = builder.log();
    out.trace.note("no construction applied within budget", {{"c", c}});
    return out;
  }
  EdgeLabeling labeling = replay(g, k, *program);
  const auto sum = verify(g, labeling);
  if (!sum || *sum != reduce(c, k)) throw std::logic_error("construction produced a wrong sum");
  out.status = ConstructStatus::Found;
  out.labeling = std::move(labeling);
  out.trace = std::move(*program);
  return out;
}

}  // namespace magic

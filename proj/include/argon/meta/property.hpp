#pragma once

// Properties over finite frameworks and the exhaustive checker that
// verifies or refutes them.

#include "argon/correspondence.hpp"
#include "argon/extensions.hpp"
#include "argon/io/serialize.hpp"
#include "argon/labellings.hpp"
#include "argon/meta/enumerate.hpp"
#include "argon/parallel.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace argon::meta {

struct Argument {
  std::size_t index;
  friend bool operator==(const Argument&, const Argument&) = default;
};

using Value = std::variant<ArgSet, Labelling, Argument>;
using Values = std::vector<Value>;
using ValueList = std::shared_ptr<const Values>;

inline const ArgSet& as_set(const Values& v, std::size_t i) { return std::get<ArgSet>(v[i]); }
inline const Labelling& as_lab(const Values& v, std::size_t i) { return std::get<Labelling>(v[i]); }
inline std::size_t as_arg(const Values& v, std::size_t i) { return std::get<Argument>(v[i]).index; }

inline std::string render(const Framework& af, const Value& v) {
  if (const auto* s = std::get_if<ArgSet>(&v))
    return io::serialize_extension(af, *s);
  if (const auto* l = std::get_if<Labelling>(&v))
    return io::serialize_labelling(af, *l);
  return af.name(std::get<Argument>(v).index);
}

/// Everything a property may ask about one framework, computed on demand
/// and kept for the other properties checked on the same framework.
class Context {
public:
  struct Restricted {
    explicit Restricted(Framework f) : af(std::move(f)), ext(af), lab(af) {}
    Framework af;
    ExtensionSemantics ext;
    LabellingSemantics lab;
  };

  explicit Context(Framework af) : af_(std::make_unique<Framework>(std::move(af))) {}

  const Framework& af() const noexcept { return *af_; }
  std::size_t size() const noexcept { return af_->size(); }

  const ExtensionSemantics& ext() {
    if (!ext_)
      ext_ = std::make_unique<ExtensionSemantics>(*af_);
    return *ext_;
  }
  const LabellingSemantics& lab() {
    if (!lab_)
      lab_ = std::make_unique<LabellingSemantics>(*af_);
    return *lab_;
  }

  /// Evaluators relativised to domain D.
  const ExtensionSemantics& ext_within(const ArgSet& d) {
    auto& slot = ext_within_[d.mask()];
    if (!slot)
      slot = std::make_unique<ExtensionSemantics>(*af_, Domain{d});
    return *slot;
  }
  const LabellingSemantics& lab_within(const ArgSet& d) {
    auto& slot = lab_within_[d.mask()];
    if (!slot)
      slot = std::make_unique<LabellingSemantics>(*af_, Domain{d});
    return *slot;
  }

  /// The sub-framework induced by D, with its own evaluators.
  const Restricted& restricted(const ArgSet& d) {
    auto& slot = restricted_[d.mask()];
    if (!slot)
      slot = std::make_unique<Restricted>(restrict(*af_, d));
    return *slot;
  }

  const ArgSet& lfp() {
    if (!lfp_)
      lfp_ = least_fixpoint(size(), [&](const ArgSet& s) { return characteristic(*af_, s); });
    return *lfp_;
  }
  const ArgSet& gfp() {
    if (!gfp_)
      gfp_ = greatest_fixpoint(size(), [&](const ArgSet& s) { return characteristic(*af_, s); });
    return *gfp_;
  }

  ValueList all_sets() {
    if (!all_sets_) {
      auto v = std::make_shared<Values>();
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << size()); ++m)
        v->push_back(ArgSet::from_mask(size(), m));
      all_sets_ = std::move(v);
    }
    return all_sets_;
  }

  ValueList all_labellings() {
    if (!all_labs_) {
      auto v = std::make_shared<Values>();
      const std::uint64_t total = labelling_count(size());
      for (std::uint64_t r = 0; r < total; ++r)
        v->push_back(labelling_from_rank(size(), r));
      all_labs_ = std::move(v);
    }
    return all_labs_;
  }

  ValueList arguments() {
    if (!args_) {
      auto v = std::make_shared<Values>();
      for (std::size_t a = 0; a < size(); ++a)
        v->push_back(Argument{a});
      args_ = std::move(v);
    }
    return args_;
  }

  ValueList sets_of(SemanticsId sem) {
    auto& slot = sets_of_[static_cast<std::size_t>(sem)];
    if (!slot) {
      auto v = std::make_shared<Values>();
      for (const auto& s : ext().members(sem))
        v->push_back(s);
      slot = std::move(v);
    }
    return slot;
  }

  ValueList labellings_of(SemanticsId sem) {
    auto& slot = labs_of_[static_cast<std::size_t>(sem)];
    if (!slot) {
      auto v = std::make_shared<Values>();
      for (const auto& l : lab().members(sem))
        v->push_back(l);
      slot = std::move(v);
    }
    return slot;
  }

private:
  std::unique_ptr<Framework> af_;
  std::unique_ptr<ExtensionSemantics> ext_;
  std::unique_ptr<LabellingSemantics> lab_;
  std::unordered_map<std::uint64_t, std::unique_ptr<ExtensionSemantics>> ext_within_;
  std::unordered_map<std::uint64_t, std::unique_ptr<LabellingSemantics>> lab_within_;
  std::unordered_map<std::uint64_t, std::unique_ptr<Restricted>> restricted_;
  std::optional<ArgSet> lfp_, gfp_;
  ValueList all_sets_, all_labs_, args_;
  std::array<ValueList, all_semantics.size()> sets_of_, labs_of_;
};

enum class WitnessKind { Set, Labelling, Argument };

inline constexpr std::string_view kind_name(WitnessKind k) {
  switch (k) {
  case WitnessKind::Set: return "set";
  case WitnessKind::Labelling: return "labelling";
  case WitnessKind::Argument: return "argument";
  }
  return "?";
}

/// A universally quantified variable. Its range may depend on the values
/// already bound to the variables before it.
struct Quantifier {
  std::string name;
  WitnessKind kind;
  std::function<ValueList(Context&, const Values&)> range;
};

namespace q {

inline Quantifier set(std::string name) {
  return {std::move(name), WitnessKind::Set, [](Context& c, const Values&) { return c.all_sets(); }};
}
inline Quantifier set_of(SemanticsId sem, std::string name) {
  return {std::move(name), WitnessKind::Set, [sem](Context& c, const Values&) { return c.sets_of(sem); }};
}
/// Subsets of the set bound at position `outer`.
inline Quantifier subset_of(std::size_t outer, std::string name) {
  return {std::move(name), WitnessKind::Set, [outer](Context& c, const Values& b) {
            auto v = std::make_shared<Values>();
            for (const auto& s : *c.all_sets())
              if (std::get<ArgSet>(s).subset_of(as_set(b, outer)))
                v->push_back(s);
            return ValueList(std::move(v));
          }};
}
inline Quantifier labelling(std::string name) {
  return {std::move(name), WitnessKind::Labelling, [](Context& c, const Values&) { return c.all_labellings(); }};
}
inline Quantifier labelling_of(SemanticsId sem, std::string name) {
  return {std::move(name), WitnessKind::Labelling,
          [sem](Context& c, const Values&) { return c.labellings_of(sem); }};
}
/// Labellings that are Undec outside the set bound at position `outer`.
inline Quantifier labelling_within(std::size_t outer, std::string name) {
  return {std::move(name), WitnessKind::Labelling, [outer](Context& c, const Values& b) {
            const ArgSet& d = as_set(b, outer);
            auto v = std::make_shared<Values>();
            for (const auto& x : *c.all_labellings()) {
              const auto& l = std::get<Labelling>(x);
              if (l.in_set().subset_of(d) && l.out_set().subset_of(d))
                v->push_back(x);
            }
            return ValueList(std::move(v));
          }};
}
inline Quantifier argument(std::string name) {
  return {std::move(name), WitnessKind::Argument, [](Context& c, const Values&) { return c.arguments(); }};
}

} // namespace q

enum class Expectation {
  Holds,    ///< must be verified
  Refuted,  ///< must be refuted with a witness
  Advisory, ///< checked and reported, no expectation
};

struct Property {
  std::string id;
  std::string statement;
  std::vector<Quantifier> quantifiers;
  std::function<bool(Context&, const Values&)> body;
  Expectation expectation = Expectation::Holds;

  /// e.g. "L:labelling a:argument"
  std::string signature() const {
    std::string out = "framework";
    for (const auto& qu : quantifiers)
      out += " " + qu.name + ":" + std::string(kind_name(qu.kind));
    return out;
  }
};

/// The first binding (in quantifier order) for which the body is false.
inline std::optional<Values> find_witness(const Property& p, Context& ctx) {
  Values bound;
  bound.reserve(p.quantifiers.size());
  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == p.quantifiers.size())
      return !p.body(ctx, bound);
    const ValueList range = p.quantifiers[depth].range(ctx, bound);
    for (const auto& v : *range) {
      bound.push_back(v);
      if (self(self, depth + 1))
        return true;
      bound.pop_back();
    }
    return false;
  };
  if (rec(rec, 0))
    return bound;
  return std::nullopt;
}

inline std::optional<Values> find_witness(const Property& p, const Framework& af) {
  Context ctx(af);
  return find_witness(p, ctx);
}

struct Counterexample {
  Framework af;
  std::vector<std::pair<std::string, Value>> bindings;

  const Value& binding(std::string_view name) const {
    for (const auto& [n, v] : bindings)
      if (n == name)
        return v;
    throw std::out_of_range("no binding named '" + std::string(name) + "'");
  }
};

inline Counterexample make_counterexample(const Property& p, Framework af, const Values& values) {
  Counterexample c{std::move(af), {}};
  for (std::size_t i = 0; i < values.size(); ++i)
    c.bindings.emplace_back(p.quantifiers[i].name, values[i]);
  return c;
}

/// Re-evaluates the body on the stored bindings; true when it is false there.
inline bool refutes(const Property& p, const Counterexample& c) {
  if (c.bindings.size() != p.quantifiers.size())
    return false;
  Context ctx(c.af);
  Values v;
  for (const auto& [n, val] : c.bindings)
    v.push_back(val);
  return !p.body(ctx, v);
}

struct Verified {
  std::size_t max_n;
  std::uint64_t frameworks;
  bool sampled = false;
  std::uint64_t seed = 0;
};

struct Refuted {
  Counterexample counterexample;
};

struct Verdict {
  std::variant<Verified, Refuted> result;

  bool verified() const noexcept { return std::holds_alternative<Verified>(result); }
  bool refuted() const noexcept { return std::holds_alternative<Refuted>(result); }
  const Verified& as_verified() const { return std::get<Verified>(result); }
  const Counterexample& counterexample() const { return std::get<Refuted>(result).counterexample; }
};

inline bool meets_expectation(const Property& p, const Verdict& v) {
  switch (p.expectation) {
  case Expectation::Holds: return v.verified();
  case Expectation::Refuted: return v.refuted() && refutes(p, v.counterexample());
  case Expectation::Advisory: return true;
  }
  return false;
}

struct CheckOptions {
  std::size_t max_n = 4;
  bool dedup = false;
  /// With n >= 5 and no dedup, check this many random frameworks per size.
  std::uint64_t samples = 0;
  std::uint64_t seed = 0x5eed;
  std::size_t threads = 0;
  bool minimise = true;
  bool allow_large = false;
};

// ---------------------------------------------------------------------------
// Counterexample minimisation.

/// Drops arguments, then attacks, one at a time while a witness survives,
/// then renames the arguments A, B, C, ... in the order that makes the
/// adjacency bit-string largest (so a chain reads A -> B -> C) and searches
/// the witness again on that presentation.
inline Counterexample minimise(const Property& p, const Counterexample& c) {
  Framework cur = c.af;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < cur.size() && !changed; ++a) {
      ArgSet keep = cur.universe();
      keep.erase(a);
      Framework smaller = restrict(cur, keep);
      if (find_witness(p, smaller)) {
        cur = std::move(smaller);
        changed = true;
      }
    }
    for (std::size_t e = 0; e < cur.attacks().size() && !changed; ++e) {
      std::vector<Attack> attacks = cur.attacks();
      attacks.erase(attacks.begin() + static_cast<std::ptrdiff_t>(e));
      Framework smaller = Framework::from_indices(cur.names(), std::move(attacks));
      if (find_witness(p, smaller)) {
        cur = std::move(smaller);
        changed = true;
      }
    }
  }

  if (cur.size() > max_code_n)
    return make_counterexample(p, cur, *find_witness(p, cur));
  const std::size_t n = cur.size();
  const std::uint64_t code = code_of(cur);
  std::uint64_t best = code;
  if (n > 1) {
    const PermutationTable table(n);
    for (std::size_t k = 0; k < table.size(); ++k)
      best = std::max(best, table.apply(k, code));
  }
  Framework shown = framework_from_code(n, best);
  auto w = find_witness(p, shown);
  return make_counterexample(p, std::move(shown), *w);
}

// ---------------------------------------------------------------------------
// Checking.

namespace detail {

inline std::vector<std::uint64_t> codes_for(std::size_t n, const CheckOptions& opts, bool& sampled) {
  sampled = false;
  if (n > max_enumeration_n && !opts.allow_large)
    throw BudgetError("checking frameworks with " + std::to_string(n) + " arguments needs an explicit override");
  if (opts.dedup || n <= 4 || opts.allow_large)
    return framework_codes(n, {opts.dedup, opts.allow_large});
  if (opts.samples == 0)
    throw BudgetError("frameworks with " + std::to_string(n) +
                      " arguments are only checked with dedup or random sampling");
  sampled = true;
  std::mt19937_64 rng(opts.seed + n);
  std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << (n * n)) - 1);
  std::vector<std::uint64_t> out(opts.samples);
  for (auto& c : out)
    c = pick(rng);
  return out;
}

} // namespace detail

/// Checks several properties in one pass over the frameworks, so that the
/// per-framework evaluators are shared. Frameworks are visited by size, then
/// code; each refuted property reports the first refuting framework in that
/// order, however the work was split across threads.
inline std::vector<Verdict> check_properties(const std::vector<const Property*>& props, const CheckOptions& opts = {}) {
  const std::size_t k = props.size();
  std::vector<std::optional<Counterexample>> found(k);
  std::uint64_t frameworks = 0;
  bool sampled_any = false;
  const std::size_t workers = worker_count(opts.threads);

  for (std::size_t n = 0; n <= opts.max_n; ++n) {
    bool sampled = false;
    const auto codes = detail::codes_for(n, opts, sampled);
    sampled_any = sampled_any || sampled;

    constexpr std::size_t block = 2048;
    for (std::size_t lo = 0; lo < codes.size(); lo += block) {
      std::vector<std::size_t> pending;
      for (std::size_t i = 0; i < k; ++i)
        if (!found[i])
          pending.push_back(i);
      if (pending.empty())
        break;
      const std::size_t hi = std::min(codes.size(), lo + block);
      const std::size_t chunks = workers <= 1 ? 1 : workers * 4;
      // Per chunk and pending property: first refuting framework in the chunk.
      std::vector<std::vector<std::optional<Values>>> hits(chunks, std::vector<std::optional<Values>>(pending.size()));
      std::vector<std::vector<std::uint64_t>> where(chunks, std::vector<std::uint64_t>(pending.size()));
      parallel_chunks(lo, hi, workers, chunks, [&](std::uint64_t a, std::uint64_t b, std::size_t chunk) {
        for (std::uint64_t i = a; i < b; ++i) {
          Context ctx(framework_from_code(n, codes[i]));
          for (std::size_t j = 0; j < pending.size(); ++j) {
            if (hits[chunk][j])
              continue;
            if (auto w = find_witness(*props[pending[j]], ctx)) {
              hits[chunk][j] = std::move(w);
              where[chunk][j] = codes[i];
            }
          }
        }
      });
      for (std::size_t j = 0; j < pending.size(); ++j)
        for (std::size_t chunk = 0; chunk < chunks; ++chunk)
          if (hits[chunk][j]) {
            const Property& p = *props[pending[j]];
            found[pending[j]] = make_counterexample(p, framework_from_code(n, where[chunk][j]), *hits[chunk][j]);
            break;
          }
      frameworks += hi - lo;
    }
  }

  std::vector<Verdict> out;
  for (std::size_t i = 0; i < k; ++i) {
    if (found[i]) {
      Counterexample c = opts.minimise ? minimise(*props[i], *found[i]) : *found[i];
      out.push_back({Refuted{std::move(c)}});
    } else {
      out.push_back({Verified{opts.max_n, frameworks, sampled_any, sampled_any ? opts.seed : 0}});
    }
  }
  return out;
}

inline Verdict check_property(const Property& p, const CheckOptions& opts = {}) {
  return check_properties({&p}, opts).front();
}

/// `PROPERTY <id> VERIFIED n<=<k> frameworks=<m>`, or `PROPERTY <id>
/// REFUTED` followed by the counterexample in APX and `% name = value`
/// binding lines.
inline std::string format_verdict(const Property& p, const Verdict& v) {
  if (v.verified()) {
    const auto& ok = v.as_verified();
    std::string line = "PROPERTY " + p.id + " VERIFIED n<=" + std::to_string(ok.max_n) +
                       " frameworks=" + std::to_string(ok.frameworks);
    if (ok.sampled)
      line += " seed=" + std::to_string(ok.seed);
    return line + "\n";
  }
  const auto& c = v.counterexample();
  std::string out = "PROPERTY " + p.id + " REFUTED\n" + io::to_apx(c.af);
  for (const auto& [name, val] : c.bindings)
    out += "% " + name + " = " + render(c.af, val) + "\n";
  return out;
}

} // namespace argon::meta

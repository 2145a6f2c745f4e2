#include "quosyn/suite.hpp"

#include <functional>

#include "quosyn/framework.hpp"
#include "quosyn/minimize.hpp"
#include "quosyn/position.hpp"

namespace quosyn::harness {

namespace {

// One generated-input property: fresh samples per trial, sub-seeded so the
// failing trial is reproducible in isolation.  Object-language failures are
// shrunk before they are recorded.
template <class F, class Gen, class Check>
property_record run_property(const F& f, const gen_config& cfg,
                             const std::string& name, Gen&& gen, Check&& check,
                             bool shrink_failures) {
  const std::uint64_t base = property_seed(cfg.seed, name);
  property_tally tally(name, cfg.seed);
  for (std::uint64_t i = 0; i < cfg.trials; ++i) {
    const std::uint64_t trial_seed = sub_seed(base, i);
    rng r(trial_seed);
    auto e = gen(r);
    if (check(e)) {
      tally.pass();
      continue;
    }
    if (shrink_failures) {
      auto small =
          minimize(f, e, [&](const auto& x) { return !check(x); });
      tally.fail(f.expr_text(small), trial_seed);
    } else {
      tally.fail(f.expr_text(e), trial_seed);
    }
  }
  return tally.finish();
}

template <class F, class GenObj, class GenSyn>
check_report run_generic_suite(const F& f, const gen_config& cfg,
                               GenObj&& gen_obj, GenSyn&& gen_syn) {
  check_report rep;
  rep.instance = f.id();
  const framework_flags flags = f.flags();

  // one sample batch drives the core axiom list
  const std::uint64_t base = property_seed(cfg.seed, "core_samples");
  std::vector<typename F::expr_type> samples;
  std::vector<std::uint64_t> seeds;
  samples.reserve(cfg.trials);
  for (std::uint64_t i = 0; i < cfg.trials; ++i) {
    const std::uint64_t trial_seed = sub_seed(base, i);
    rng r(trial_seed);
    samples.push_back(gen_obj(r));
    seeds.push_back(trial_seed);
  }
  check_report core = check_framework(
      f, std::span<const typename F::expr_type>(samples), cfg.seed, seeds);
  rep.properties = std::move(core.properties);

  rep.properties.push_back(run_property(
      f, cfg, "evaluation_axiom_syntax", gen_syn,
      [&](const auto& e) { return detail::evaluation_axiom_holds(f, e); },
      false));

  if (flags.syn_surjective) {
    rep.properties.push_back(run_property(
        f, cfg, "surjective_totality", gen_syn,
        [&](const auto& e) { return direct_eval(f, e).has_value(); }, false));
  }
  if (flags.universal_disquotation) {
    rep.properties.push_back(run_property(
        f, cfg, "syntactic_disquotation", gen_obj,
        [&](const auto& e) {
          return detail::syntactic_disquotation_holds(f, e);
        },
        true));
  }
  return rep;
}

check_report suite_prop(const gen_config& cfg) {
  prop::framework f;
  auto gen_obj = [&](rng& r) {
    return prop::framework::text(prop::print(gen_formula(r, cfg.max_size)));
  };
  auto gen_syn = [&](rng& r) {
    return prop::framework::tree(gen_formula(r, cfg.max_size));
  };
  return run_generic_suite(f, cfg, gen_obj, gen_syn);
}

check_report suite_strlang(const gen_config& cfg) {
  strlang::framework f;
  auto gen_obj = [&](rng& r) { return gen_strlang_object(r, cfg.max_size); };
  auto gen_syn = [&](rng& r) { return gen_strlang_syntax(r, cfg.max_size); };
  return run_generic_suite(f, cfg, gen_obj, gen_syn);
}

check_report suite_goedel(const gen_config& cfg, goedel::framework::mode m) {
  goedel::framework f(m);
  const bool quote = m == goedel::framework::mode::builtin;
  auto gen_obj = [&, quote](rng& r) {
    return gen_arith_expr(r, cfg.max_size, quote);
  };
  auto gen_syn = [&, m](rng& r) {
    return gen_goedel_syntax(r, cfg.max_size, m);
  };
  check_report rep = run_generic_suite(f, cfg, gen_obj, gen_syn);

  if (m == goedel::framework::mode::total) {
    rep.properties.push_back(run_property(
        f, cfg, "evaluation_total_restricted", gen_syn,
        [&](const auto& e) { return f.eval(e).has_value(); }, false));
  } else {
    // the framework's evaluation is not total on its syntax language:
    // exhibit one natural below 10^6 that decodes to nothing
    property_tally tally("evaluation_partial_witness", cfg.seed);
    if (cfg.trials > 0) {
      bool found = false;
      for (std::uint64_t n = 1; n <= 1'000'000 && !found; ++n) {
        goedel::arith t = goedel::numeral(n);
        if (f.in_syntax(t) && !f.eval(t)) found = true;
      }
      tally.tally(found, "no undefined evaluation below 10^6", cfg.seed);
    }
    rep.properties.push_back(tally.finish());
  }
  return rep;
}

check_report suite_minilisp(const gen_config& cfg) {
  lisp::framework f;
  const std::uint64_t fuel = f.fuel();
  auto gen_obj = [&](rng& r) { return gen_sexpr(r, cfg.max_size); };
  auto gen_syn = [&](rng& r) {
    return gen_lisp_defined(r, cfg.max_size, fuel);
  };
  check_report rep = run_generic_suite(f, cfg, gen_obj, gen_syn);

  rep.properties.push_back(run_property(
      f, cfg, "backquote_equivalence",
      [&](rng& r) { return gen_backquote(r, cfg.max_size, fuel); },
      [&](const lisp::sexpr& bq) {
        auto direct = lisp::interp_backquote(bq, fuel);
        auto m = lisp::expand_backquote(bq);
        auto qq = quasiquote(f, m);
        auto via_quasi =
            qq ? lisp::interp(*qq, fuel) : std::optional<lisp::sexpr>{};
        if (!direct && !via_quasi) return true;
        return direct && via_quasi && *direct == *via_quasi;
      },
      false));
  return rep;
}

check_report suite_lambda(const gen_config& cfg) {
  lam::framework f;
  const std::uint64_t fuel = f.fuel();
  auto gen_obj = [&](rng& r) {
    return gen_lam_normalizing(r, cfg.max_size, fuel);
  };
  auto gen_syn = [&](rng& r) {
    // normal forms; those on the schema image exercise defined evaluation
    if (r.chance(2, 3)) {
      return lam::rep(gen_lam_normalizing(r, cfg.max_size / 2 + 1, fuel));
    }
    auto nf = lam::beta_nf(gen_lam_normalizing(r, cfg.max_size, fuel), fuel);
    return nf->t;
  };
  check_report rep = run_generic_suite(f, cfg, gen_obj, gen_syn);

  rep.properties.push_back(run_property(
      f, cfg, "self_interpretation",
      [&](rng& r) { return gen_lam_normalizing(r, cfg.max_size, fuel); },
      [&](const lam::term& t) {
        auto via_interp = lam::run_self_interp(t, fuel);
        auto direct = lam::beta_nf(t, fuel);
        return via_interp && direct && lam::alpha_eq(via_interp->t, direct->t);
      },
      false));
  return rep;
}

check_report suite_ring(const gen_config& cfg) {
  ring::framework f;
  auto gen_obj = [&](rng& r) {
    return ring::framework::of(gen_ring_expr(r, cfg.max_size));
  };
  auto gen_syn = [&](rng& r) {
    return ring::framework::of(gen_poly(r, cfg.max_size));
  };
  check_report rep = run_generic_suite(f, cfg, gen_obj, gen_syn);

  rep.properties.push_back(run_property(
      f, cfg, "semantic_preservation",
      [&](rng& r) { return ring::framework::of(gen_ring_expr(r, cfg.max_size)); },
      [&](const ring::framework::expr_type& ex) {
        const auto& e = std::get<ring::ring_expr>(ex);
        const auto np = ring::normalize(ring::pquote(e));
        if (!(ring::normalize(ring::to_poly(np)) == np)) return false;
        const ring::ring_expr back = ring::interp_p(ring::to_poly(np));
        rng r(property_seed(cfg.seed, ring::show(e)));
        for (int k = 0; k < 50; ++k) {
          ring::ring_env phi;
          for (std::uint32_t v = 0; v < 4; ++v) phi[v] = r.range(-9, 9);
          if (ring::eval_ring(back, phi) != ring::eval_ring(e, phi)) {
            return false;
          }
        }
        return true;
      },
      false));
  return rep;
}

}  // namespace

check_report run_suite(const gen_config& cfg) {
  if (cfg.instance_id == "prop") return suite_prop(cfg);
  if (cfg.instance_id == "strlang") return suite_strlang(cfg);
  if (cfg.instance_id == "goedel") {
    return suite_goedel(cfg, goedel::framework::mode::meta);
  }
  if (cfg.instance_id == "goedel-total") {
    return suite_goedel(cfg, goedel::framework::mode::total);
  }
  if (cfg.instance_id == "goedel-quote") {
    return suite_goedel(cfg, goedel::framework::mode::builtin);
  }
  if (cfg.instance_id == "minilisp") return suite_minilisp(cfg);
  if (cfg.instance_id == "lambda") return suite_lambda(cfg);
  if (cfg.instance_id == "ring") return suite_ring(cfg);
  throw input_error("unknown instance: " + cfg.instance_id);
}

const std::vector<std::string>& instance_ids() {
  static const std::vector<std::string> ids = {
      "prop",         "strlang",  "goedel", "goedel-total",
      "goedel-quote", "minilisp", "lambda", "ring"};
  return ids;
}

std::string gen_expr_text(const gen_config& cfg) {
  rng r(cfg.seed);
  if (cfg.instance_id == "prop") {
    return prop::print(gen_formula(r, cfg.max_size));
  }
  if (cfg.instance_id == "strlang") {
    return strlang::framework{}.expr_text(gen_strlang_object(r, cfg.max_size));
  }
  if (cfg.instance_id == "goedel" || cfg.instance_id == "goedel-total") {
    return goedel::spell(gen_arith_expr(r, cfg.max_size, false));
  }
  if (cfg.instance_id == "goedel-quote") {
    return goedel::spell(gen_arith_expr(r, cfg.max_size, true));
  }
  if (cfg.instance_id == "minilisp") {
    return lisp::show(gen_sexpr(r, cfg.max_size));
  }
  if (cfg.instance_id == "lambda") {
    return lam::show(gen_lam_term(r, cfg.max_size));
  }
  if (cfg.instance_id == "ring") {
    return ring::show(gen_ring_expr(r, cfg.max_size));
  }
  throw input_error("unknown instance: " + cfg.instance_id);
}

}  // namespace quosyn::harness

#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "polydisc/bounds.hpp"
#include "polydisc/cns.hpp"
#include "polydisc/diophantine.hpp"
#include "polydisc/equivalence.hpp"
#include "polydisc/errors.hpp"
#include "polydisc/factor.hpp"
#include "polydisc/hermite.hpp"
#include "polydisc/int_poly.hpp"
#include "polydisc/numberfield.hpp"
#include "polydisc/quadforms.hpp"
#include "polydisc/record.hpp"
#include "polydisc/reduction.hpp"

namespace polydisc::cli {

namespace {

struct RunConfig {
  std::string format = "human";
  long precision = 128;
};

class Emitter {
 public:
  Emitter(std::ostream& out, bool structured) : out_(out), structured_(structured) {}

  void emit(const Record& r) {
    if (structured_) {
      out_ << serialize(r) << '\n';
      return;
    }
    // Human: the config echo is one commented line, other records print one
    // field per line after a header naming the record type.
    const std::string* type = r.get("type");
    if (type && *type == "config") {
      Record rest;
      for (const auto& [k, v] : r.fields)
        if (k != "type") rest.add(k, v);
      out_ << "# config " << serialize(rest) << '\n';
      return;
    }
    if (type && *type != "result") out_ << "[" << *type << "]\n";
    for (const auto& [k, v] : r.fields) {
      if (k == "type") continue;
      out_ << k << " = " << v << '\n';
    }
  }

 private:
  std::ostream& out_;
  bool structured_;
};

std::string str(const Integer& x) { return x.get_str(); }
std::string str(const Rational& x) { return x.get_str(); }
std::string str(bool b) { return b ? "true" : "false"; }
std::string str(long x) { return std::to_string(x); }

std::string str(const std::vector<Integer>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + "]";
}

std::string str_double(double x) {
  if (!std::isfinite(x)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<Integer> parse_int_list(const std::string& text) {
  std::string s = text;
  for (char& c : s)
    if (c == '[' || c == ']' || c == ',') c = ' ';
  std::istringstream in(s);
  std::vector<Integer> out;
  std::string tok;
  while (in >> tok) {
    Integer v;
    if (v.set_str(tok, 10) != 0) throw ParseError("bad integer in list: " + tok);
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

Integer parse_integer(const std::string& text) {
  Integer v;
  std::string t = text;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty() || v.set_str(t, 10) != 0) throw ParseError("bad integer: " + text);
  return v;
}

void add_report(Record& r, const BoundReport& rep) {
  r.add("bound.name", rep.name);
  r.add("bound.branch", rep.branch);
  r.add("bound.degree", std::to_string(rep.degree));
  r.add("bound.abs_disc", str(rep.abs_disc));
  r.add("bound.log10", rep.log10_bound.to_string(20));
  r.add("bound.value", str_double(rep.value()));
  if (rep.log_clamped) r.add("bound.log_clamped", "true");
  for (const auto& [k, v] : rep.details) r.add("bound." + k, v);
}

Record config(const std::string& command, const RunConfig& cfg) {
  Record r;
  r.add("type", "config");
  r.add("command", command);
  r.add("format", cfg.format);
  r.add("precision", std::to_string(cfg.precision));
  return r;
}

Record result() {
  Record r;
  r.add("type", "result");
  return r;
}

Record typed(const std::string& type) {
  Record r;
  r.add("type", type);
  return r;
}

void add_solutions(Emitter& em, const BoxSolutions& s) {
  for (const auto& x : s.solutions) em.emit(typed("solution").add("x", str(x)));
}

// A maximality flag when the trial-division test can decide it.
std::string maximality(const NumberField& K, const OrderModule& O) {
  if (abs(O.discriminant) > Integer("1000000000000")) return "unknown";
  return str(is_maximal_order(K, O));
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact reduction theory of integral polynomials", "polydisc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();
  app.add_option("--precision", cfg.precision, "Working precision in bits for numeric steps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string f_text, g_text;
  std::function<int(Emitter&)> run;

  auto poly_arg = [](CLI::App* sub, std::string& target, const char* name) {
    sub->add_option(name, target, "Polynomial, e.g. \"x^3 - 2\" or [-2,0,0,1]")->required();
  };

  // disc
  auto* disc = app.add_subcommand("disc", "Discriminant D(f)");
  poly_arg(disc, f_text, "f");
  disc->callback([&] {
    run = [&](Emitter& em) {
      em.emit(config("disc", cfg));
      IntPoly f = parse_poly(f_text);
      em.emit(result().add("poly", f.to_string()).add("degree", std::to_string(f.degree())).add("disc", str(discriminant(f))));
      return kOk;
    };
  });

  // height
  auto* ht = app.add_subcommand("height", "Naive height H(f)");
  poly_arg(ht, f_text, "f");
  ht->callback([&] {
    run = [&](Emitter& em) {
      em.emit(config("height", cfg));
      IntPoly f = parse_poly(f_text);
      em.emit(result().add("poly", f.to_string()).add("height", str(height(f))));
      return kOk;
    };
  });

  // factor
  auto* fac = app.add_subcommand("factor", "Factorization over Z");
  poly_arg(fac, f_text, "f");
  fac->callback([&] {
    run = [&](Emitter& em) {
      em.emit(config("factor", cfg));
      IntPoly f = parse_poly(f_text);
      Factorization F = factor_over_z(f);
      em.emit(result()
                  .add("poly", f.to_string())
                  .add("unit", str(F.unit))
                  .add("factors", std::to_string(F.factors.size()))
                  .add("irreducible", str(F.factors.size() == 1 && F.factors[0].multiplicity == 1 && f.degree() >= 1)));
      for (const auto& x : F.factors)
        em.emit(typed("factor").add("poly", x.poly.to_string()).add("multiplicity", std::to_string(x.multiplicity)));
      return kOk;
    };
  });

  // equiv
  auto* eq = app.add_subcommand("equiv", "Z-equivalence (exact) or GL2(Z)-equivalence (bounded search)");
  poly_arg(eq, f_text, "f");
  poly_arg(eq, g_text, "g");
  bool eq_z = false, eq_gl2 = false;
  long eq_bound = 4;
  auto* oz = eq->add_flag("--z", eq_z, "Decide Z-equivalence f(X) ~ f(+-X + a)");
  auto* og = eq->add_flag("--gl2", eq_gl2, "Search GL2(Z) witnesses");
  oz->excludes(og);
  eq->add_option("--bound", eq_bound, "Entry bound for the GL2(Z) search")->check(CLI::PositiveNumber)->capture_default_str();
  eq->callback([&] {
    run = [&](Emitter& em) {
      const std::string mode = eq_gl2 ? "gl2" : "z";
      Record c = config("equiv", cfg);
      c.add("mode", mode);
      if (eq_gl2) c.add("bound", str(eq_bound));
      em.emit(c);
      IntPoly f = parse_poly(f_text), g = parse_poly(g_text);
      if (!eq_gl2) {
        auto s = z_equivalent(f, g);
        Record r = result().add("equivalent", str(s.has_value()));
        if (s) r.add("witness", to_string(*s));
        em.emit(r);
        return kOk;
      }
      if (f.degree() != g.degree()) {
        em.emit(result().add("equivalent", "false").add("reason", "degree"));
        return kOk;
      }
      if (discriminant(f) != discriminant(g)) {
        em.emit(result().add("equivalent", "false").add("reason", "discriminant"));
        return kOk;
      }
      auto s = gl2_equivalent_bounded(f, g, Integer(eq_bound));
      if (!s.witness) {
        em.emit(result().add("equivalent", "not-within-bound"));
        return kNoAnswer;
      }
      em.emit(result().add("equivalent", "true").add("witness", to_string(*s.witness)));
      return kOk;
    };
  });

  // reduce
  auto* red = app.add_subcommand("reduce", "Height reduction with a certified bound report");
  poly_arg(red, f_text, "f");
  bool red_quad = false, red_monic = false;
  long red_prec = 0;
  auto* oq = red->add_flag("--quadratic", red_quad, "Quadratic reduction (accepts a form \"(A,B,C)\" as well)");
  auto* om = red->add_flag("--monic-quadratic", red_monic, "Monic quadratic reduction by translation");
  oq->excludes(om);
  red->add_option("--precision", red_prec, "Working precision in bits")->check(CLI::PositiveNumber);
  red->callback([&] {
    run = [&](Emitter& em) {
      if (red_prec > 0) cfg.precision = red_prec;
      IntPoly f = (!f_text.empty() && f_text[0] == '(') ? parse_bqf(f_text).to_poly() : parse_poly(f_text);
      std::string mode = red_quad ? "quadratic" : red_monic ? "monic-quadratic" : (f.degree() == 2 ? "quadratic" : "general");
      Record c = config("reduce", cfg);
      c.add("mode", mode);
      em.emit(c);
      Record r = result();
      r.add("poly", f.to_string()).add("disc", str(discriminant(f))).add("height_in", str(height(f)));
      if (mode == "quadratic") {
        QuadraticReduction q = reduce_quadratic(f);
        r.add("g", q.g.to_string()).add("form", to_string(IntBQF::from_poly(q.g))).add("height", str(height(q.g)));
        r.add("witness", to_string(q.witness)).add("bound_holds", str(q.bound_holds));
        add_report(r, q.report);
      } else if (mode == "monic-quadratic") {
        MonicQuadraticReduction q = reduce_monic_quadratic(f);
        r.add("g", q.g.to_string()).add("height", str(height(q.g)));
        r.add("witness", to_string(q.shift)).add("bound_holds", str(q.bound_holds));
        add_report(r, q.report);
      } else {
        PolynomialReduction q = reduce_polynomial(f, cfg.precision);
        r.add("g", q.g.to_string()).add("height", str(height(q.g)));
        r.add("witness", to_string(q.witness)).add("bound_holds", str(q.bound_holds));
        r.add("rational_root", str(q.rational_root));
        r.add("M", q.M.mid.to_string(20)).add("R", q.R.mid.to_string(20));
        r.add("bound_lower", q.bound.lower().to_string(20));
        r.add("precision_used", str(q.precision_used));
        add_report(r, q.report);
      }
      em.emit(r);
      return kOk;
    };
  });

  // bounds
  auto* bnd = app.add_subcommand("bounds", "Evaluate an explicit height or degree bound");
  std::string b_kind, b_disc;
  int b_degree = 0;
  bool b_reducible = false, b_monic = false;
  bnd->add_option("--kind", b_kind, "Which bound")
      ->required()
      ->check(CLI::IsMember({"quadratic", "monic-quadratic", "cubic", "monic-z", "gl2", "max-degree"}));
  bnd->add_option("--disc", b_disc, "Discriminant D (or |D|)")->required();
  bnd->add_option("--degree", b_degree, "Degree n (monic-z, gl2)");
  bnd->add_flag("--reducible", b_reducible, "Reducible branch (quadratic, cubic)");
  bnd->add_flag("--monic", b_monic, "Monic variant (max-degree)");
  bnd->callback([&] {
    run = [&](Emitter& em) {
      Record c = config("bounds", cfg);
      c.add("kind", b_kind).add("disc", b_disc).add("degree", std::to_string(b_degree));
      c.add("reducible", str(b_reducible)).add("monic", str(b_monic));
      em.emit(c);
      Integer D = parse_integer(b_disc);
      Record r = result();
      if (b_kind == "max-degree") {
        r.add("max_degree", std::to_string(max_degree_for_discriminant(abs(D), b_monic)));
        em.emit(r);
        return kOk;
      }
      BoundReport rep;
      if (b_kind == "quadratic") rep = bound_quadratic_height(D, b_reducible);
      else if (b_kind == "monic-quadratic") rep = bound_monic_quadratic_height(D);
      else if (b_kind == "cubic") rep = bound_cubic_height(D, b_reducible);
      else if (b_kind == "monic-z") rep = bound_monic_equivalence_height(b_degree, abs(D));
      else rep = bound_gl2_equivalence_height(b_degree, abs(D));
      add_report(r, rep);
      em.emit(r);
      return kOk;
    };
  });

  // hermite-form
  auto* hf = app.add_subcommand("hermite-form", "Associated decomposable form [f] and its discriminant");
  poly_arg(hf, f_text, "f");
  hf->callback([&] {
    run = [&](Emitter& em) {
      em.emit(config("hermite-form", cfg));
      IntPoly f = parse_poly(f_text);
      MultiPoly F = associated_form(f);
      em.emit(result().add("poly", f.to_string()).add("form", F.to_string()).add("disc", str(decomposable_discriminant(F, f))));
      return kOk;
    };
  });

  // hermite-equiv
  auto* he = app.add_subcommand("hermite-equiv", "Hermite equivalence via invariant orders and ideals");
  poly_arg(he, f_text, "f");
  poly_arg(he, g_text, "g");
  long he_bound = 64;
  he->add_option("--bound", he_bound, "Coordinate bound for the principal generator search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  he->callback([&] {
    run = [&](Emitter& em) {
      Record c = config("hermite-equiv", cfg);
      c.add("bound", str(he_bound));
      em.emit(c);
      IntPoly f = parse_poly(f_text), g = parse_poly(g_text);
      HermiteDecision d = hermite_equivalent(f, g, he_bound);
      Record r = result().add("verdict", to_string(d.verdict));
      if (!d.reason.empty()) r.add("reason", d.reason);
      r.add("candidate_roots", std::to_string(d.candidate_roots));
      if (d.beta) r.add("beta", to_string(*d.beta));
      if (d.gamma) r.add("gamma", to_string(*d.gamma));
      em.emit(r);
      return d.verdict == HermiteVerdict::Unknown ? kNoAnswer : kOk;
    };
  });

  // order
  auto* ord = app.add_subcommand("order", "Invariant order Z_alpha");
  poly_arg(ord, f_text, "f");
  bool ord_inv = false;
  ord->add_flag("--invariant", ord_inv, "Use the explicit basis 1, w_2, ..., w_n instead of the multiplier ring");
  ord->callback([&] {
    run = [&](Emitter& em) {
      Record c = config("order", cfg);
      c.add("construction", ord_inv ? "explicit-basis" : "multiplier-ring");
      em.emit(c);
      IntPoly f = parse_poly(f_text);
      NumberField K(f);
      OrderModule O = invariant_order(K);
      Record r = result().add("poly", K.poly().to_string());
      if (ord_inv) {
        std::string b;
        for (std::size_t i = 0; i < O.basis.size(); ++i) b += (i ? "; " : "") + to_string(O.basis[i]);
        r.add("basis", b).add("module", to_string(O.module));
      } else {
        ZModuleInK mr = multiplier_ring(K, power_module(K, nf_generator(K)));
        r.add("module", to_string(mr));
        if (!(mr == O.module)) throw InternalError("order: multiplier ring differs from the invariant order");
      }
      r.add("disc", str(O.discriminant)).add("maximal", maximality(K, O));
      em.emit(r);
      return kOk;
    };
  });

  // ideal
  auto* idl = app.add_subcommand("ideal", "Invariant ideal I_alpha, its norm and a bounded principality search");
  poly_arg(idl, f_text, "f");
  long idl_bound = 16;
  idl->add_option("--bound", idl_bound, "Coordinate bound for the generator search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  idl->callback([&] {
    run = [&](Emitter& em) {
      Record c = config("ideal", cfg);
      c.add("bound", str(idl_bound));
      em.emit(c);
      IntPoly f = parse_poly(f_text);
      NumberField K(f);
      FracIdeal I = invariant_ideal(K);
      FracIdeal Ii = ideal_inverse(K, I);
      Record r = result().add("poly", K.poly().to_string()).add("module", to_string(I.module));
      r.add("norm", str(ideal_norm(I))).add("inverse", to_string(Ii.module));
      PrincipalityResult p = is_principal_bounded(K, I, idl_bound);
      r.add("candidates_tested", std::to_string(p.candidates_tested));
      if (p.generator) {
        r.add("principal", "true").add("generator", to_string(*p.generator));
      } else {
        r.add("principal", "not-within-bound");
      }
      em.emit(r);
      return p.generator ? kOk : kNoAnswer;
    };
  });

  // indexform / discform
  long box = 50;
  std::string value_text;
  auto form_command = [&](const char* name, const char* help, bool index) {
    auto* sub = app.add_subcommand(name, help);
    poly_arg(sub, f_text, "f");
    sub->add_option("--value", value_text, index ? "Solve |I(x)| = V" : "Solve D(x) = V");
    sub->add_option("--box", box, "Search box [-B, B] for solutions")->check(CLI::PositiveNumber)->capture_default_str();
    sub->callback([&, name, index] {
      run = [&, name, index](Emitter& em) {
        Record c = config(name, cfg);
        c.add("box", str(box));
        if (!value_text.empty()) c.add("value", value_text);
        em.emit(c);
        IntPoly f = parse_poly(f_text);
        NumberField K(f);
        IndexForm idx = index_form(K, invariant_order(K));
        Record r = result().add("poly", K.poly().to_string()).add("order_disc", str(idx.order.discriminant));
        r.add("form", index ? idx.form.to_string() : idx.discriminant_form.to_string());
        if (value_text.empty()) {
          em.emit(r);
          return kOk;
        }
        Integer v = parse_integer(value_text);
        BoxSolutions s = index ? solve_index_form_bounded(idx, v, box) : solve_discriminant_form_bounded(idx, v, box);
        r.add("solutions", std::to_string(s.solutions.size()));
        r.add("box", str(s.box)).add("complete_within_box", "true").add("box_limited", str(s.box_limited));
        r.add("touches_boundary", str(s.touches_boundary));
        em.emit(r);
        add_solutions(em, s);
        return kOk;
      };
    });
  };
  form_command("indexform", "Index form of Z_alpha, optionally solved in a box", true);
  form_command("discform", "Discriminant form of Z_alpha, optionally solved in a box", false);

  // mm
  auto* mm = app.add_subcommand("mm", "Generators of the maximal order up to sign and translation");
  poly_arg(mm, f_text, "f");
  long mm_box = 100;
  mm->add_option("--box", mm_box, "Search box for index-one solutions")->check(CLI::PositiveNumber)->capture_default_str();
  mm->callback([&] {
    run = [&](Emitter& em) {
      Record c = config("mm", cfg);
      c.add("box", str(mm_box));
      em.emit(c);
      IntPoly f = parse_poly(f_text);
      NumberField K(f);
      OrderModule O = invariant_order(K);
      if (maximality(K, O) != "true")
        throw DomainError("mm: the order Z_alpha is not known to be maximal; give a generator of the maximal order");
      IndexForm idx = index_form(K, O);
      GeneratorSearch gs = generators_of_order(K, idx, mm_box);
      em.emit(result()
                  .add("poly", K.poly().to_string())
                  .add("field_disc", str(O.discriminant))
                  .add("mm", std::to_string(gs.classes.size()))
                  .add("box", str(gs.box))
                  .add("complete_within_box", "true")
                  .add("box_limited", str(gs.box_limited))
                  .add("touches_boundary", str(gs.touches_boundary)));
      for (const auto& g : gs.classes)
        em.emit(typed("generator").add("coords", str(g.coords)).add("element", to_string(g.element)).add("min_poly", g.min_poly.to_string()));
      return kOk;
    };
  });

  // enumerate
  auto* en = app.add_subcommand("enumerate", "Monic polynomials of given degree and discriminant up to Z-equivalence");
  int en_degree = 0;
  std::string en_disc;
  long en_cap = 10;
  en->add_option("--degree", en_degree, "Degree n")->required()->check(CLI::PositiveNumber);
  en->add_option("--disc", en_disc, "Discriminant D")->required();
  en->add_option("--cap", en_cap, "Coefficient cap H")->check(CLI::PositiveNumber)->capture_default_str();
  en->callback([&] {
    run = [&](Emitter& em) {
      Record c = config("enumerate", cfg);
      c.add("degree", std::to_string(en_degree)).add("disc", en_disc).add("cap", str(en_cap));
      em.emit(c);
      MonicEnumeration e = enumerate_monic_by_discriminant(en_degree, parse_integer(en_disc), en_cap);
      em.emit(result()
                  .add("classes", std::to_string(e.classes.size()))
                  .add("max_degree", std::to_string(e.max_degree))
                  .add("cap", str(e.cap))
                  .add("complete_within_cap", "true")
                  .add("box_limited", str(e.box_limited)));
      for (const auto& p : e.classes) em.emit(typed("polynomial").add("poly", p.to_string()));
      return kOk;
    };
  });

  // cns
  auto* cn = app.add_subcommand("cns", "Canonical number system test and radix expansion");
  std::string cns_base, cns_expand_text;
  long cns_cap = 200000;
  cn->add_option("--base", cns_base, "Monic minimal polynomial of the base")->required();
  cn->add_option("--expand", cns_expand_text, "Power-basis coordinates to expand, e.g. [3,0]");
  cn->add_option("--cap", cns_cap, "Closure size cap")->check(CLI::PositiveNumber)->capture_default_str();
  cn->callback([&] {
    run = [&](Emitter& em) {
      Record c = config("cns", cfg);
      c.add("cap", str(cns_cap));
      if (!cns_expand_text.empty()) c.add("expand", cns_expand_text);
      em.emit(c);
      CnsBase base = make_cns_base(parse_poly(cns_base));
      if (!cns_expand_text.empty()) {
        std::vector<Integer> z = parse_int_list(cns_expand_text);
        z.resize(static_cast<std::size_t>(base.min_poly.degree()), Integer(0));
        CnsExpansion x = cns_expand(base, z, cns_cap);
        Record r = result().add("base", base.min_poly.to_string()).add("terminated", str(x.terminated));
        if (x.terminated) r.add("digits", str(x.digits));
        else r.add("state", str(x.state));
        em.emit(r);
        return x.terminated ? kOk : kNoAnswer;
      }
      CnsDecision d = is_cns_base(base, static_cast<std::size_t>(cns_cap));
      Record r = result().add("base", base.min_poly.to_string()).add("verdict", to_string(d.verdict));
      r.add("closure_size", std::to_string(d.closure_size));
      em.emit(r);
      for (const auto& z : d.cycle) em.emit(typed("cycle").add("z", str(z)));
      return d.verdict == CnsVerdict::Inconclusive ? kNoAnswer : kOk;
    };
  });

  // thue
  auto* th = app.add_subcommand("thue", "Solutions of F(x, y) = m in a box, F the homogenization of f");
  poly_arg(th, f_text, "F");
  std::string th_m;
  long th_box = 1000;
  th->add_option("m", th_m, "Right-hand side")->required();
  th->add_option("--box", th_box, "Search box")->check(CLI::PositiveNumber)->capture_default_str();
  th->callback([&] {
    run = [&](Emitter& em) {
      Record c = config("thue", cfg);
      c.add("box", str(th_box));
      em.emit(c);
      IntPoly F = parse_poly(f_text);
      BoxSolutions s = thue_solve_bounded(F, parse_integer(th_m), th_box);
      em.emit(result()
                  .add("form", F.to_string())
                  .add("m", th_m)
                  .add("solutions", std::to_string(s.solutions.size()))
                  .add("box", str(s.box))
                  .add("complete_within_box", "true")
                  .add("box_limited", str(s.box_limited))
                  .add("touches_boundary", str(s.touches_boundary)));
      add_solutions(em, s);
      return kOk;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kDomainError;
  }

  Emitter em(out, cfg.format == "structured");
  try {
    return run(em);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const NotInvertible& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const PrecisionExhausted& e) {
    err << "error: precision exhausted: " << e.what() << '\n';
    return kNoAnswer;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace polydisc::cli

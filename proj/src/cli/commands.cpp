#include "balcat/cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <numeric>
#include <regex>
#include <sstream>

#include "balcat/algebra/morita.hpp"
#include "balcat/cli/corpus.hpp"
#include "balcat/common/errors.hpp"
#include "balcat/gradedcat/io.hpp"
#include "balcat/modcat/modcat.hpp"

namespace balcat {

using nlohmann::json;

bool RunReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

void RunReport::run(const std::string& name, const std::function<CheckReport()>& body) {
  try {
    const CheckReport r = body();
    if (r.checks().empty()) {
      add(name, true, r.title());
      return;
    }
    const Check* bad = r.first_failure();
    if (bad == nullptr && r.checks().size() == 1 && !r.checks()[0].detail.empty()) {
      add(name, true, r.checks()[0].detail);
    } else if (bad == nullptr) {
      add(name, true, r.title().empty() ? std::to_string(r.checks().size()) + " checks"
                                        : r.title() + ": " + std::to_string(r.checks().size()) + " checks");
    } else {
      add(name, false, (r.title().empty() ? "" : r.title() + ": ") + bad->name +
                           (bad->detail.empty() ? "" : " (" + bad->detail + ")"));
    }
  } catch (const std::exception& e) {
    add(name, false, std::string("exception: ") + e.what());
  }
}

json RunReport::to_json(bool with_timing) const {
  json cs = json::array();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    cs.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
    failed += c.passed ? 0 : 1;
  }
  json j{{"command", command},
         {"inputs", inputs},
         {"results", results},
         {"checks", cs},
         {"counts", {{"total", checks.size()}, {"failed", failed}}},
         {"verdict", passed() ? "pass" : "fail"}};
  if (with_timing) j["timing"] = {{"seconds", seconds}};
  return j;
}

std::string RunReport::summary() const {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    if (c.passed) continue;
    ++failed;
    os << "  FAIL " << c.name << ": " << c.detail << "\n";
  }
  os << command << ": " << (checks.size() - failed) << "/" << checks.size() << " checks passed, verdict "
     << (passed() ? "pass" : "fail") << "\n";
  return os.str();
}

json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
}

namespace {

std::optional<std::pair<std::string, std::size_t>> builtin(const std::string& source,
                                                            const std::string& pattern) {
  std::smatch m;
  if (!std::regex_match(source, m, std::regex(pattern))) return std::nullopt;
  return std::make_pair(m[1].str(), static_cast<std::size_t>(std::stoull(m[2].str())));
}

template <class F>
auto from_file(const std::string& path, F&& f) {
  const json j = load_json_file(path);
  try {
    return f(j);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace

GroupPtr load_group(const std::string& source) {
  if (auto b = builtin(source, "(cyclic|symmetric):([0-9]{1,3})")) {
    try {
      return share(b->first == "cyclic" ? FiniteGroup::cyclic(b->second) : FiniteGroup::symmetric(b->second));
    } catch (const std::exception& e) {
      throw InputError("--group " + source + ": " + e.what());
    }
  }
  return from_file(source, [](const json& j) { return share(FiniteGroup::from_json(j)); });
}

Field parse_field(const std::string& source) {
  if (source == "Q") return Field::rational();
  if (auto b = builtin(source, "(Fp):([0-9]{1,10})")) {
    try {
      return Field::prime(b->second);
    } catch (const std::exception& e) {
      throw InputError("--field " + source + ": " + e.what());
    }
  }
  throw InputError("--field must be Q or Fp:<prime>, got " + source);
}

AlgebraObjectPtr load_algebra_object(const std::string& source, const GroupPtr& k, const Field& f) {
  if (source == "group-algebra") return share(group_algebra_object(k, f));
  if (source == "unit") return share(unit_algebra_object(k, f));
  return from_file(source, [&](const json& j) {
    GradedAlgebraObject a = graded_algebra_from_json(j, k);
    if (a.field() != f) throw FieldMismatch("algebra is over " + a.field().name() + ", not " + f.name());
    const CheckReport r = validate_algebra_object(a);
    if (!r.passed()) throw ValidationError("graded algebra fails " + r.first_failure()->name);
    return share(std::move(a));
  });
}

GradedModuleObject load_module_object(const std::string& source, const AlgebraObjectPtr& a, Side side) {
  if (source == "regular") return regular_module(a, side);
  if (source == "zero") return zero_module(a, side);
  return from_file(source, [&](const json& j) {
    GradedModuleObject m = module_object_from_json(j, a);
    if (m.side() != side) {
      throw StructureMismatch(std::string("expected a ") + side_name(side) + " module");
    }
    return m;
  });
}

bool default_splitting(const std::string& group_source, const FiniteGroup& k, const Field& f) {
  if (!f.is_rational()) {
    const std::uint64_t p = f.characteristic();
    return k.order() % p != 0 && p % k.exponent() == 1 % k.exponent();
  }
  return k.exponent() <= 2 || group_source.rfind("symmetric:", 0) == 0;
}

std::optional<Scope> parse_scope(const std::string& text) {
  for (Scope s : {Scope::linalg, Scope::algebra, Scope::graded, Scope::modcat, Scope::balanced, Scope::all})
    if (text == scope_name(s)) return s;
  return std::nullopt;
}

const char* scope_name(Scope s) {
  switch (s) {
    case Scope::linalg: return "linalg";
    case Scope::algebra: return "algebra";
    case Scope::graded: return "graded";
    case Scope::modcat: return "modcat";
    case Scope::balanced: return "balanced";
    case Scope::all: return "all";
  }
  return "?";
}

namespace {

struct Instance {
  std::string label;
  GroupPtr group;
  Field field;
  AlgebraObjectPtr algebra;  // k[K]
  AlgebraObjectPtr unit;
};

// The built-in corpus. The first algebra is the reference one that
// --inject-fault corrupts.
std::vector<Instance> instances(bool fault) {
  std::vector<Instance> out;
  auto add = [&](std::string label, FiniteGroup g, Field f) {
    const GroupPtr k = share(std::move(g));
    out.push_back(Instance{std::move(label), k, f, share(group_algebra_object(k, f)),
                           share(unit_algebra_object(k, f))});
  };
  add("Z2/Q", FiniteGroup::cyclic(2), Field::rational());
  add("Z3/F7", FiniteGroup::cyclic(3), Field::prime(7));
  add("S3/Q", FiniteGroup::symmetric(3), Field::rational());
  if (fault) {
    const auto& ref = *out[0].algebra;
    // e0 e1 = 2 e1 breaks the unit law of e0
    out[0].algebra = share(GradedAlgebraObject(
        ref.object(), share(ref.algebra().with_structure_constant(0, 1, 1, ref.field().from_int(2)))));
  }
  return out;
}

CheckReport single(const std::string& name, bool ok, const std::string& detail) {
  CheckReport r;
  r.add(name, ok, detail);
  return r;
}

std::string dims_text(const std::vector<std::size_t>& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "]";
}

void linalg_suite(RunReport& rep, Corpus& corpus) {
  for (const Field& f : {Field::rational(), Field::prime(7)}) {
    const std::string tag = "linalg/" + f.name() + "/";
    std::vector<Matrix> ms;
    for (int t = 0; t < 20; ++t) ms.push_back(corpus.matrix(f, 1 + corpus.below(6), 1 + corpus.below(6)));
    // low-rank products so that kernels and cokernels are nontrivial
    for (int t = 0; t < 10; ++t) {
      const std::size_t inner = 1 + corpus.below(2);
      ms.push_back(corpus.matrix(f, 2 + corpus.below(4), inner) * corpus.matrix(f, inner, 2 + corpus.below(4)));
    }
    rep.run(tag + "rank_nullity", [&] {
      CheckReport r;
      for (std::size_t t = 0; t < ms.size(); ++t) {
        const auto ker = kernel_basis(ms[t]);
        bool ok = rank(ms[t]) + ker.size() == ms[t].cols();
        for (const auto& v : ker) ok = ok && is_zero(ms[t].apply(v));
        r.add("matrix " + std::to_string(t), ok, ms[t].to_string());
      }
      return r;
    });
    rep.run(tag + "cokernel", [&] {
      CheckReport r;
      for (std::size_t t = 0; t < ms.size(); ++t) {
        const Cokernel c = cokernel(ms[t]);
        const bool ok = c.dim == ms[t].rows() - rank(ms[t]) && (c.projection * ms[t]).is_zero() &&
                        rank(c.projection) == c.dim;
        r.add("matrix " + std::to_string(t), ok, ms[t].to_string());
      }
      return r;
    });
    rep.run(tag + "inverse", [&] {
      CheckReport r;
      for (std::size_t t = 0; t < ms.size(); ++t) {
        if (ms[t].rows() != ms[t].cols()) continue;
        const auto inv = inverse(ms[t]);
        const std::size_t n = ms[t].rows();
        bool ok = inv.has_value() == (rank(ms[t]) == n) && inv.has_value() == !determinant(ms[t]).is_zero();
        if (inv) ok = ok && (ms[t] * *inv).is_identity() && (*inv * ms[t]).is_identity();
        r.add("matrix " + std::to_string(t), ok, ms[t].to_string());
      }
      return r;
    });
    rep.run(tag + "solve", [&] {
      CheckReport r;
      for (std::size_t t = 0; t < ms.size(); ++t) {
        const Vector b = ms[t].apply(corpus.matrix(f, ms[t].cols(), 1).column(0));
        const auto x = solve_affine(ms[t], b);
        r.add("matrix " + std::to_string(t), x && ms[t].apply(*x) == b, ms[t].to_string());
      }
      return r;
    });
  }
}

void algebra_suite(RunReport& rep, const std::vector<Instance>& inst) {
  for (const auto& in : inst) {
    const std::string tag = "algebra/" + in.label + "/";
    const AlgebraPtr a = in.algebra->algebra_ptr();
    const std::size_t classes = in.group->conjugacy_class_count();
    rep.run(tag + "axioms", [&] { return validate_algebra(*a); });
    rep.run(tag + "center_vs_classes", [&] {
      const std::size_t z = center_basis(*a).size();
      return single("dim Z", z == classes, "dim Z = " + std::to_string(z) + ", classes = " + std::to_string(classes));
    });
    rep.run(tag + "simple_count", [&] {
      const std::size_t n = split_simple_count(*a, true);
      return single("simples", n == classes, "simples = " + std::to_string(n));
    });
    rep.run(tag + "wedderburn", [&] {
      const auto dims = simple_dimensions(*a);
      std::size_t total = 0;
      for (auto d : dims) total += d * d;
      return single("sum n_i^2", total == a->dim(), "dims " + dims_text(dims));
    });
    rep.run(tag + "regular_hom", [&] {
      const AlgModule reg = AlgModule::regular(a, Side::left);
      const std::size_t h = hom_space(reg, reg).size();
      return single("End(A)", h == a->dim(), "dim = " + std::to_string(h));
    });
    rep.run(tag + "regular_tensor", [&] {
      const std::size_t d =
          tensor_over_algebra(AlgModule::regular(a, Side::right), AlgModule::regular(a, Side::left)).dim;
      return single("A ⊗_A A", d == a->dim(), "dim = " + std::to_string(d));
    });
    rep.run(tag + "morita_counit", [&] {
      const AlgModule reg = AlgModule::regular(a, Side::left);
      return endomorphism_algebra_morita(reg, {reg, direct_sum(reg, reg)}).counit_check;
    });
  }
}

void graded_suite(RunReport& rep, const std::vector<Instance>& inst, Corpus& corpus) {
  for (const auto& in : inst) {
    const std::string tag = "graded/" + in.label + "/";
    rep.run(tag + "algebra_objects", [&] {
      CheckReport r;
      r.merge(validate_algebra_object(*in.algebra));
      r.merge(validate_algebra_object(*in.unit));
      r.merge(validate_algebra_object(endomorphism_algebra_object(
          direct_sum(GradedObject::unit(in.group), corpus.graded_object(in.group, 2)), in.field)));
      return r;
    });
    rep.run(tag + "zigzag", [&] {
      CheckReport r;
      for (int t = 0; t < 5; ++t) {
        const GradedObject u = corpus.graded_object(in.group, 4);
        const Duality d = dual_object_with_zigzag(u, in.field);
        const Check* bad = d.zigzag.first_failure();
        r.add("dims " + dims_text(u.dims()), bad == nullptr, bad ? bad->name : "");
      }
      return r;
    });
    rep.run(tag + "tensor_dims", [&] {
      CheckReport r;
      const FiniteGroup& k = *in.group;
      for (int t = 0; t < 5; ++t) {
        const GradedObject u = corpus.graded_object(in.group, 4), v = corpus.graded_object(in.group, 4);
        std::vector<std::size_t> conv(k.order(), 0);
        for (std::size_t g = 0; g < k.order(); ++g)
          for (std::size_t h = 0; h < k.order(); ++h) conv[k.mul(g, h)] += u.dims()[g] * v.dims()[h];
        const auto got = tensor_objects(u, v).dims();
        r.add(dims_text(u.dims()) + " ⊗ " + dims_text(v.dims()), got == conv, "got " + dims_text(got));
      }
      return r;
    });
    rep.run(tag + "regular_graded_end", [&] {
      const auto reg = regular_module(in.algebra, Side::right);
      const std::size_t e = in.algebra->object().indices_of_grade(in.group->identity()).size();
      const std::size_t h = graded_hom(reg, reg).size();
      return single("End(B)", h == e, "dim = " + std::to_string(h) + ", dim B_e = " + std::to_string(e));
    });
  }
  rep.run("graded/F2/nonsplit_exactness", [&] {
    const GroupPtr z2 = share(FiniteGroup::cyclic(2));
    const Field f2 = Field::prime(2);
    const AlgebraObjectPtr flat = share(trivially_graded_group_algebra(z2, FiniteGroup::cyclic(2), f2));
    const GradedModuleObject triv(flat, Side::right, GradedObject::unit(z2),
                                  {Matrix::identity(f2, 1), Matrix::identity(f2, 1)});
    const ShortExactSequence s{triv, regular_module(flat, Side::right), triv,
                               Matrix::from_ints(f2, {{1}, {1}}), Matrix::from_ints(f2, {{1, 1}})};
    CheckReport r;
    r.merge(check_short_exact(s));
    for (std::size_t g = 0; g < 2; ++g) r.merge(exactness_probe(GradedObject::simple(z2, g), s));
    return r;
  });
}

void modcat_suite(RunReport& rep, const std::vector<Instance>& inst, Corpus& corpus) {
  for (const auto& in : inst) {
    const std::string tag = "modcat/" + in.label + "/";
    rep.run(tag + "ihom_unit", [&] {
      // Vect is Mod_{k[K]}(Vect[K]) with 1 = k[K]
      const auto one = regular_module(in.algebra, Side::right);
      const auto dims = internal_hom(one, one).value().dims();
      bool ok = true;
      for (auto d : dims) ok = ok && d == 1;
      return single("IHom(1,1)", ok, "dims " + dims_text(dims));
    });
    rep.run(tag + "ihom_adjunction", [&] {
      CheckReport r;
      for (int t = 0; t < 3; ++t) {
        const auto m1 = corpus.free_module(in.algebra, Side::right, 2);
        const auto m2 = corpus.free_module(in.algebra, Side::right, 2);
        r.merge(verify_internal_hom_adjunction(internal_hom(m1, m2), {corpus.graded_object(in.group, 2)}));
      }
      return r;
    });
    rep.run(tag + "ostrik_regular", [&] {
      const OstrikData data = ostrik_algebra_data(regular_module(in.algebra, Side::right));
      const FinAlgebra t = transport_algebra(data.algebra->algebra(), regular_identification(data));
      const FinAlgebra& b = in.algebra->algebra();
      CheckReport r;
      for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
          r.add("e" + std::to_string(i) + " e" + std::to_string(j), t.product(i, j) == b.product(i, j));
      r.add("unit", t.unit() == b.unit());
      return r;
    });
    rep.run(tag + "reconstruction", [&] {
      const auto p = regular_module(in.algebra, Side::right);
      const OstrikData data = ostrik_algebra_data(p);
      CheckReport r;
      for (int t = 0; t < 3; ++t) {
        const auto m = corpus.free_module(in.algebra, Side::right, 2);
        r.merge(reconstruction_counit_check(data, m));
        r.merge(reconstruction_unit_check(data, ihom_as_module(data, m)));
      }
      return r;
    });
  }
}

void balanced_suite(RunReport& rep, const std::vector<Instance>& inst, Corpus& corpus) {
  for (const auto& in : inst) {
    const std::string tag = "balanced/" + in.label + "/";
    const std::size_t rank_cap = in.group->order() > 3 ? 1 : 2;
    rep.run(tag + "simple_count", [&] {
      const std::size_t n = simple_count_balanced(balanced_product(in.algebra, in.algebra, true));
      const std::size_t c = in.group->conjugacy_class_count();
      return single("simples", n == c, "simples = " + std::to_string(n) + ", classes = " + std::to_string(c));
    });
    rep.run(tag + "unit_simple_count", [&] {
      const std::size_t n = simple_count_balanced(balanced_product(in.unit, in.unit, true));
      return single("simples", n == in.group->order(), "simples = " + std::to_string(n));
    });
    rep.run(tag + "pentagon_triangle", [&] {
      CheckReport r;
      for (int t = 0; t < 4; ++t) {
        const auto x = corpus.free_module(in.algebra, Side::left, rank_cap);
        const auto y = corpus.free_module(in.algebra, Side::right, rank_cap);
        r.merge(pentagon_check(x, corpus.graded_object(in.group, 2), corpus.graded_object(in.group, 2), y));
        r.merge(triangle_check(x, y));
      }
      return r;
    });
    rep.run(tag + "hom_formula", [&] {
      CheckReport r;
      for (int t = 0; t < 4; ++t) {
        const auto x = corpus.free_module(in.algebra, Side::left, rank_cap);
        const auto x2 = corpus.free_module(in.algebra, Side::left, rank_cap);
        const auto y = corpus.free_module(in.algebra, Side::right, rank_cap);
        const auto y2 = corpus.free_module(in.algebra, Side::right, rank_cap);
        const HomFormula h = hom_formula_check(x, x2, y, y2);
        r.add("quadruple " + std::to_string(t), h.equal(),
              "lhs = " + std::to_string(h.lhs) + ", rhs = " + std::to_string(h.rhs) + ", x " +
                  dims_text(x.object().dims()) + ", x' " + dims_text(x2.object().dims()) + ", y " +
                  dims_text(y.object().dims()) + ", y' " + dims_text(y2.object().dims()));
      }
      return r;
    });
    rep.run(tag + "round_trip_and_coequalizer", [&] {
      const auto e = enveloping_algebra(in.algebra, in.algebra);
      CheckReport r;
      for (int t = 0; t < 3; ++t) {
        const auto x = corpus.bimodule(*e, rank_cap);
        const auto back = e->to_bimodule(e->to_module(x));
        r.add("round trip " + std::to_string(t),
              back.object() == x.object() &&
                  back.bimodule().as_left().actions() == x.bimodule().as_left().actions() &&
                  back.bimodule().as_right().actions() == x.bimodule().as_right().actions(),
              "dims " + dims_text(x.object().dims()));
        r.merge(coequalizer_presentation(x));
      }
      return r;
    });
  }
  rep.run("balanced/Z2/Q/extension", [&] {
    const auto& in = inst[0];
    const auto e = enveloping_algebra(in.algebra, in.algebra);
    const FinAlgebra& ea = e->algebra();
    std::vector<Matrix> ls, rs;
    for (std::size_t i = 0; i < ea.dim(); ++i) {
      ls.push_back(ea.left_multiplication(i));
      rs.push_back(ea.right_multiplication(i));
    }
    const AlgBimodule w(e->algebra_ptr(), e->algebra_ptr(), ea.dim(), std::move(ls), std::move(rs));
    CheckReport r;
    for (int t = 0; t < 2; ++t) r.merge(extend_balanced_functor(*e, w, corpus.bimodule(*e, 1)).report);
    return r;
  });
}

json inputs_json(const ProductOptions& o) {
  return {{"group", o.group},         {"field", o.field}, {"algebra_a", o.algebra_a},
          {"algebra_b", o.algebra_b}, {"seed", o.seed},   {"splitting", o.splitting},
          {"sweep", o.sweep}};
}

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

RunReport cmd_verify(const VerifyOptions& opt) {
  const auto start = Clock::now();
  RunReport rep;
  rep.command = "verify";
  rep.inputs = {{"scope", scope_name(opt.scope)}, {"seed", opt.seed}, {"inject_fault", opt.inject_fault}};
  Corpus corpus(opt.seed);
  const auto inst = instances(opt.inject_fault);
  rep.run("reference/" + inst[0].label + "/axioms", [&] { return validate_algebra(inst[0].algebra->algebra()); });
  auto want = [&](Scope s) { return opt.scope == Scope::all || opt.scope == s; };
  if (want(Scope::linalg)) linalg_suite(rep, corpus);
  if (want(Scope::algebra)) algebra_suite(rep, inst);
  if (want(Scope::graded)) graded_suite(rep, inst, corpus);
  if (want(Scope::modcat)) modcat_suite(rep, inst, corpus);
  if (want(Scope::balanced)) balanced_suite(rep, inst, corpus);
  rep.seconds = elapsed(start);
  return rep;
}

RunReport cmd_balanced_product(const ProductOptions& opt) {
  const auto start = Clock::now();
  RunReport rep;
  rep.command = "balanced-product";
  rep.inputs = inputs_json(opt);
  const GroupPtr k = load_group(opt.group);
  const Field f = parse_field(opt.field);
  const AlgebraObjectPtr a = load_algebra_object(opt.algebra_a, k, f);
  const AlgebraObjectPtr b = load_algebra_object(opt.algebra_b, k, f);
  bool splitting = false;
  if (opt.splitting == "yes") {
    splitting = true;
  } else if (opt.splitting == "auto") {
    auto is_builtin = [](const std::string& s) { return s == "group-algebra" || s == "unit"; };
    splitting = is_builtin(opt.algebra_a) && is_builtin(opt.algebra_b) && default_splitting(opt.group, *k, f);
  } else if (opt.splitting != "no") {
    throw InputError("--splitting must be auto, yes or no");
  }

  rep.run("validate/algebra_a", [&] { return validate_algebra_object(*a); });
  rep.run("validate/algebra_b", [&] { return validate_algebra_object(*b); });
  std::optional<BalancedProduct> bp;
  rep.run("validate/enveloping", [&] {
    bp = balanced_product(a, b, splitting);
    return single("E", true, "dim E = " + std::to_string(bp->enveloping->algebra().dim()));
  });
  rep.results["group"] = {{"name", k->name()}, {"order", k->order()}, {"classes", k->conjugacy_class_count()}};
  rep.results["field"] = f.name();
  rep.results["splitting_asserted"] = splitting;
  if (bp) {
    rep.results["dim_a"] = a->dim();
    rep.results["dim_b"] = b->dim();
    rep.results["dim_enveloping"] = bp->enveloping->algebra().dim();
    rep.results["certified_semisimple"] = bp->certificate.certified();
    rep.results["simples"] = bp->simple_count ? json(*bp->simple_count) : json(nullptr);
  }
  Corpus corpus(opt.seed);
  const std::size_t cap = k->order() > 3 ? 1 : 2;
  std::size_t agreed = 0;
  for (std::size_t t = 0; t < opt.sweep; ++t) {
    rep.run("hom_formula/" + std::to_string(t), [&] {
      const auto x = corpus.free_module(a, Side::left, cap);
      const auto x2 = corpus.free_module(a, Side::left, cap);
      const auto y = corpus.free_module(b, Side::right, cap);
      const auto y2 = corpus.free_module(b, Side::right, cap);
      const HomFormula h = hom_formula_check(x, x2, y, y2);
      agreed += h.equal() ? 1 : 0;
      return single("lhs = rhs", h.equal(),
                    "lhs = " + std::to_string(h.lhs) + ", rhs = " + std::to_string(h.rhs) + ", x " +
                        dims_text(x.object().dims()) + ", x' " + dims_text(x2.object().dims()) + ", y " +
                        dims_text(y.object().dims()) + ", y' " + dims_text(y2.object().dims()));
    });
  }
  rep.results["hom_formula_sweep"] = {{"instances", opt.sweep}, {"agreed", agreed}};
  rep.seconds = elapsed(start);
  return rep;
}

RunReport cmd_homcheck(const HomcheckOptions& opt) {
  const auto start = Clock::now();
  RunReport rep;
  rep.command = "homcheck";
  rep.inputs = {{"group", opt.group}, {"field", opt.field}, {"algebra_a", opt.algebra_a},
                {"algebra_b", opt.algebra_b}, {"x", opt.x}, {"x2", opt.x2}, {"y", opt.y}, {"y2", opt.y2}};
  const GroupPtr k = load_group(opt.group);
  const Field f = parse_field(opt.field);
  const AlgebraObjectPtr a = load_algebra_object(opt.algebra_a, k, f);
  const AlgebraObjectPtr b = load_algebra_object(opt.algebra_b, k, f);
  const auto x = load_module_object(opt.x, a, Side::left);
  const auto x2 = load_module_object(opt.x2, a, Side::left);
  const auto y = load_module_object(opt.y, b, Side::right);
  const auto y2 = load_module_object(opt.y2, b, Side::right);
  const HomFormula h = hom_formula_check(x, x2, y, y2);
  rep.results = {{"lhs", h.lhs}, {"rhs", h.rhs}};
  rep.add("hom_formula", h.equal(), "lhs = " + std::to_string(h.lhs) + ", rhs = " + std::to_string(h.rhs));
  rep.seconds = elapsed(start);
  return rep;
}

}  // namespace balcat

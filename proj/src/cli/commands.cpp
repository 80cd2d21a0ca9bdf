#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "modinv/cli.hpp"
#include "modinv/constructions.hpp"
#include "modinv/groebner.hpp"
#include "modinv/invariants.hpp"

namespace modinv {

namespace {

// Input problems the user can fix; reported with exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A property that was asked for and does not hold; exit code 1.
struct Verdict {
  bool holds = true;
};

struct Options {
  std::string field, group, alphas, betas, order, file, file2, poly;
  unsigned rank = 1;
  std::optional<unsigned> deg;
  unsigned tower = 2;
  std::size_t cap = 200000;
  bool same_side = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

GAlgebra load_algebra(const std::string& path) {
  const std::string text = read_file(path);
  const std::string dir = std::filesystem::path(path).parent_path().string();
  try {
    return parse_algebra_file(text, dir.empty() ? "." : dir);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what());
  }
}

std::vector<FieldElement> parse_alpha_list(const FieldPtr& k, const std::string& text, const char* flag) {
  if (text.empty()) throw InputError(std::string(flag) + " is required");
  std::vector<FieldElement> out;
  std::istringstream is(text);
  for (std::string item; std::getline(is, item, ',');) {
    try {
      out.push_back(parse_field_element(k, item));
    } catch (const ParseError& e) {
      throw InputError(std::string(flag) + ": " + e.what() + " in '" + item + "'");
    }
  }
  return out;
}

Polynomial parse_poly_arg(const GAlgebra& a, const std::string& text) {
  try {
    return a.parse(text);
  } catch (const ParseError& e) {
    throw InputError("polynomial argument, column " + std::to_string(e.column()) + ": " + e.what());
  }
}

FieldPtr field_arg(const Options& o) {
  if (o.field.empty()) throw InputError("--field is required");
  try {
    return parse_field_spec(o.field);
  } catch (const ParseError& e) {
    throw InputError(std::string("--field: ") + e.what());
  }
}

GAlgebra apply_order(const GAlgebra& a, const std::string& order) {
  if (order.empty()) return a;
  const auto o = parse_order(order);
  if (!o) throw InputError("--order must be lex or grevlex, got '" + order + "'");
  if (*o == a.ring()->order()) return a;
  const RingPtr ring = a.ring()->with_order(*o);
  std::vector<VarMap> maps;
  for (const auto& m : a.generator_maps()) {
    VarMap r{ring, ring, {}};
    for (const auto& img : m.images) r.images.push_back(img.reorder(ring));
    maps.push_back(std::move(r));
  }
  return GAlgebra::make(ring, a.group(), std::move(maps));
}

std::vector<std::size_t> var_order_arg(const GAlgebra& a, const std::string& text) {
  std::vector<std::size_t> out;
  std::istringstream is(text);
  for (std::string name; std::getline(is, name, ',');) {
    const auto i = a.ring()->index_of(name);
    if (!i) throw InputError("--order: unknown variable '" + name + "'");
    out.push_back(*i);
  }
  if (out.size() != a.ring()->nvars()) throw InputError("--order must list every variable exactly once");
  return out;
}

std::string join_vars(const GAlgebra& a, const std::vector<std::size_t>& order) {
  std::string s;
  for (std::size_t i = 0; i < order.size(); ++i) s += (i ? "," : "") + a.ring()->vars()[order[i]];
  return s;
}

unsigned default_point_degree(const GAlgebra& a) {
  return static_cast<unsigned>(std::max<std::size_t>(1, a.group()->order()));
}

std::string map_lines(const VarMap& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.images.size(); ++i)
    os << m.source->vars()[i] << " -> " << m.images[i].to_string() << "\n";
  return os.str();
}

std::vector<std::size_t> dk_elements(const GAlgebra& a) {
  std::vector<std::size_t> out;
  for (const auto& v : a.ring()->vars()) {
    if (v.rfind("x@", 0) != 0) throw InputError("not a D_k algebra: variable '" + v + "' is not x@<element>");
    std::size_t e = 0;
    try {
      e = std::stoul(v.substr(2));
    } catch (const std::exception&) {
      throw InputError("not a D_k algebra: bad variable '" + v + "'");
    }
    if (e == 0 || e >= a.group()->order()) throw InputError("not a D_k algebra: element index out of range in '" + v + "'");
    out.push_back(e);
  }
  return out;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"Modular invariant theory of finite p-groups", "modinv"};
  app.require_subcommand(1);
  Options o;
  std::ostringstream out, err;
  Verdict verdict;

  auto add_field = [&](CLI::App* c) { c->add_option("--field", o.field, "GF(p), GF(q) or GF(p^s)/m0,...,1"); };
  auto add_file = [&](CLI::App* c) { c->add_option("FILE", o.file, "algebra file")->required(); };
  auto add_deg = [&](CLI::App* c) { c->add_option("--deg", o.deg, "degree bound"); };
  auto add_order = [&](CLI::App* c) { c->add_option("--order", o.order, "monomial order: lex | grevlex"); };

  auto* build = app.add_subcommand("build", "emit a named algebra as an algebra file");
  build->require_subcommand(1);
  auto* b_dk = build->add_subcommand("dk", "D_k(G), the dehomogenized regular algebra");
  add_field(b_dk);
  b_dk->add_option("--group", o.group, "group spec")->required();
  auto* b_mho = build->add_subcommand("mho", "k[Y_1..Y_n] with (Y_i)g = Y_i - g_i");
  add_field(b_mho);
  b_mho->add_option("--rank", o.rank, "rank n of (F_p)^n");
  auto* b_balpha = build->add_subcommand("balpha", "k[Z] with (Z)g = Z - alpha_g");
  add_field(b_balpha);
  b_balpha->add_option("--alphas", o.alphas, "comma-separated F_p-independent field elements")->required();
  auto* b_cp2 = build->add_subcommand("cp2", "C_{p^2} on k[x,y]: x -> x + y^(p-1), y -> y - 1");
  add_field(b_cp2);

  auto* c_trace = app.add_subcommand("trace", "trace of a polynomial");
  add_file(c_trace);
  c_trace->add_option("POLY", o.poly)->required();
  add_order(c_trace);

  auto* c_point = app.add_subcommand("find-point", "search for an element of trace 1");
  add_file(c_point);
  add_deg(c_point);
  add_order(c_point);

  auto* check = app.add_subcommand("check", "check a property");
  check->require_subcommand(1);
  auto* k_tri = check->add_subcommand("triangular", "triangular action");
  add_file(k_tri);
  k_tri->add_option("--order", o.order, "variable order, comma-separated (default: search)");
  auto* k_inv = check->add_subcommand("invariant", "invariance of a polynomial");
  add_file(k_inv);
  k_inv->add_option("POLY", o.poly)->required();
  auto* k_refl = check->add_subcommand("reflexive", "reflexive point of D_k");
  add_file(k_refl);
  k_refl->add_option("POLY", o.poly)->required();
  auto* k_act = check->add_subcommand("action", "group law of the action");
  add_file(k_act);

  auto* c_erase = app.add_subcommand("erase", "erasure invariants of a triangular algebra");
  c_erase->add_option("A", o.file, "algebra with a point")->required();
  c_erase->add_option("GAMMA", o.file2, "triangular algebra")->required();
  add_deg(c_erase);
  c_erase->add_option("--order", o.order, "triangular variable order of GAMMA");

  auto* inv = app.add_subcommand("invariants", "invariant rings");
  inv->require_subcommand(1);
  auto* i_brute = inv->add_subcommand("brute", "basis of the invariants of degree <= --deg");
  add_file(i_brute);
  add_deg(i_brute);
  add_order(i_brute);
  auto* i_elim = inv->add_subcommand("eliminate", "generators of S^G by elimination");
  add_file(i_elim);
  add_deg(i_elim);

  auto* moore = app.add_subcommand("moore", "Moore determinant and inverse");
  moore->require_subcommand(1);
  auto* m_det = moore->add_subcommand("det", "Moore determinant");
  add_field(m_det);
  m_det->add_option("--alphas", o.alphas)->required();
  auto* m_inv = moore->add_subcommand("inverse", "coefficients of the dual linearized polynomials");
  add_field(m_inv);
  m_inv->add_option("--alphas", o.alphas)->required();

  auto* c_tensor = app.add_subcommand("tensor", "tensor product of two algebras");
  c_tensor->add_option("A", o.file)->required();
  c_tensor->add_option("B", o.file2)->required();
  c_tensor->add_flag("--same-side", o.same_side, "diagonal action of the common group");

  auto* c_free = app.add_subcommand("free-points", "freeness on rational points");
  add_file(c_free);
  c_free->add_option("--tower", o.tower, "largest extension degree m of GF(p^(s m))");
  c_free->add_option("--cap", o.cap, "point cap per extension degree");

  auto* map = app.add_subcommand("map", "morphisms between algebras");
  map->require_subcommand(1);
  auto* p_theta = map->add_subcommand("theta", "B_alpha -> Mho, Z -> sum alpha_i Y_i");
  add_field(p_theta);
  p_theta->add_option("--alphas", o.alphas)->required();
  auto* p_psi = map->add_subcommand("psi", "Mho -> B_alpha, Y_i -> f_i(Z)");
  add_field(p_psi);
  p_psi->add_option("--alphas", o.alphas)->required();
  auto* p_l = map->add_subcommand("L", "B_alpha -> B_beta, Z -> sum lambda_j Z^(p^j)");
  add_field(p_l);
  p_l->add_option("--alphas", o.alphas)->required();
  p_l->add_option("--betas", o.betas)->required();
  auto* p_point = map->add_subcommand("from-point", "D_k -> TARGET through a point of TARGET");
  p_point->add_option("DK", o.file)->required();
  p_point->add_option("TARGET", o.file2)->required();
  add_deg(p_point);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? 0 : 2, out.str(), err.str()};
  }

  try {
    if (b_dk->parsed()) {
      const FieldPtr k = field_arg(o);
      GroupPtr g;
      try {
        g = parse_group_spec(o.group, k->p());
      } catch (const ParseError& e) {
        throw InputError(std::string("--group: ") + e.what());
      }
      out << emit_algebra(build_dk(k, g).base);
    } else if (b_mho->parsed()) {
      const FieldPtr k = field_arg(o);
      out << emit_algebra(build_mho(k, k->p(), o.rank).base);
    } else if (b_balpha->parsed()) {
      const FieldPtr k = field_arg(o);
      out << emit_algebra(build_balpha(k, parse_alpha_list(k, o.alphas, "--alphas")).base);
    } else if (b_cp2->parsed()) {
      out << emit_algebra(build_cp2_example(field_arg(o)));
    } else if (c_trace->parsed()) {
      const GAlgebra a = apply_order(load_algebra(o.file), o.order);
      out << a.trace(parse_poly_arg(a, o.poly)).to_string() << "\n";
    } else if (c_point->parsed()) {
      const GAlgebra a = apply_order(load_algebra(o.file), o.order);
      const unsigned d = o.deg.value_or(default_point_degree(a));
      if (const auto pt = find_point(a, d)) {
        out << "POINT " << pt->element.to_string() << "\n";
        for (std::size_t g = 0; g < pt->orbit.size(); ++g)
          out << "ORBIT " << a.group()->names()[g] << " " << pt->orbit[g].to_string() << "\n";
      } else {
        out << "no point of degree <= " << d << "\n";
        verdict.holds = false;
      }
    } else if (k_tri->parsed()) {
      const GAlgebra a = load_algebra(o.file);
      const auto cert = o.order.empty() ? find_triangular_order(a) : is_triangular(a, var_order_arg(a, o.order));
      if (cert) {
        out << "triangular yes order " << join_vars(a, cert->var_order) << "\n";
      } else {
        out << "triangular no\n";
        verdict.holds = false;
      }
    } else if (k_inv->parsed()) {
      const GAlgebra a = load_algebra(o.file);
      verdict.holds = a.is_invariant(parse_poly_arg(a, o.poly));
      out << "invariant " << (verdict.holds ? "yes" : "no") << "\n";
    } else if (k_refl->parsed()) {
      const GAlgebra a = load_algebra(o.file);
      const auto elems = dk_elements(a);
      const Polynomial w = parse_poly_arg(a, o.poly);
      if (!certify_point(a, w)) {
        out << "not a point: tr = " << a.trace(w).to_string() << "\n";
        verdict.holds = false;
      } else {
        verdict.holds = is_reflexive_point(a, elems, w);
        out << "reflexive " << (verdict.holds ? "yes" : "no") << "\n";
      }
    } else if (k_act->parsed()) {
      try {
        const GAlgebra a = load_algebra(o.file);
        out << "action ok: " << a.group()->order() << " elements, " << a.ring()->nvars() << " variables\n";
      } catch (const ActionError& e) {
        out << "action fails at (" << e.var() << ", " << e.g() << ", " << e.h() << ")\n";
        err << e.what() << "\n";
        verdict.holds = false;
      }
    } else if (c_erase->parsed()) {
      const GAlgebra a = load_algebra(o.file), gamma = load_algebra(o.file2);
      const unsigned d = o.deg.value_or(default_point_degree(a));
      const auto pt = find_point(a, d);
      if (!pt) throw InputError("A has no point of degree <= " + std::to_string(d));
      const auto cert = o.order.empty() ? find_triangular_order(gamma) : is_triangular(gamma, var_order_arg(gamma, o.order));
      if (!cert) throw InputError("GAMMA is not triangular");
      const ErasureCert ec = erasure_lambdas(a, *pt, gamma, *cert);
      const RingPtr& tr = ec.tensor.algebra.ring();
      out << "POINT " << ec.point.to_string() << "\n";
      for (std::size_t i = 0; i < ec.lambdas.size(); ++i)
        out << "LAMBDA " << ec.rewrite_ring->vars()[a.ring()->nvars() + i] << " = " << ec.lambdas[i].to_string() << "\n";
      for (std::size_t i = 0; i < ec.rewrites.size(); ++i)
        out << "REWRITE " << tr->vars()[ec.t_vars[i]] << " = " << ec.rewrites[i].to_string() << "\n";
    } else if (i_brute->parsed()) {
      if (!o.deg) throw InputError("--deg is required");
      const GAlgebra a = apply_order(load_algebra(o.file), o.order);
      out << format_invariants(invariants_bruteforce(a, *o.deg));
    } else if (i_elim->parsed()) {
      const GAlgebra a = load_algebra(o.file);
      const EliminationResult r = invariant_ring_elimination(a, o.deg.value_or(0));
      for (const auto& g : r.generators) out << "GEN " << g.total_degree() << " " << g.to_string() << "\n";
      for (const auto& f : r.unexplained) out << "UNEXPLAINED " << f.to_string() << "\n";
      out << (r.verified() ? "verified up to degree " : "mismatch up to degree ") << r.d_check << "\n";
      verdict.holds = r.verified();
    } else if (m_det->parsed()) {
      const FieldPtr k = field_arg(o);
      const auto alphas = parse_alpha_list(k, o.alphas, "--alphas");
      out << "det " << moore_det(alphas).to_string() << "\n";
      verdict.holds = fp_independent(alphas);
      out << "independent " << (verdict.holds ? "yes" : "no") << "\n";
    } else if (m_inv->parsed()) {
      const FieldPtr k = field_arg(o);
      const auto alphas = parse_alpha_list(k, o.alphas, "--alphas");
      try {
        const MooreSystem sys = moore_inverse(alphas);
        const RingPtr zr = Ring::create(k, {"Z"});
        for (std::size_t i = 0; i < sys.inverse->size(); ++i) {
          Polynomial f(zr);
          std::uint64_t e = 1;
          for (const auto& c : (*sys.inverse)[i]) {
            f += Polynomial::monomial(zr, {static_cast<Exponent>(e)}, c.code());
            e *= k->p();
          }
          out << "f" << i + 1 << " = " << f.to_string() << "\n";
        }
      } catch (const SingularSystem&) {
        out << "singular: the alphas are F_p-dependent\n";
        verdict.holds = false;
      }
    } else if (c_tensor->parsed()) {
      const GAlgebra a = load_algebra(o.file), b = load_algebra(o.file2);
      out << emit_algebra(o.same_side ? same_side_tensor(a, b).algebra : tensor(a, b));
    } else if (c_free->parsed()) {
      const GAlgebra a = load_algebra(o.file);
      const FreenessReport r = freeness_on_points(a, o.tower, o.cap);
      out << format_freeness(a, r);
      verdict.holds = r.free;
    } else if (p_theta->parsed() || p_psi->parsed()) {
      const FieldPtr k = field_arg(o);
      const BasicBAlpha b = build_balpha(k, parse_alpha_list(k, o.alphas, "--alphas"));
      const MhoAlgebra m = build_mho(k, b.base.group(), b.coords);
      const AlgebraMorphism mor = p_theta->parsed() ? build_theta(b, m) : build_psi(m, b);
      out << map_lines(mor.map) << "equivariant " << (mor.equivariant ? "yes" : "no") << "\n";
      verdict.holds = mor.equivariant;
    } else if (p_l->parsed()) {
      const FieldPtr k = field_arg(o);
      const BasicBAlpha ba = build_balpha(k, parse_alpha_list(k, o.alphas, "--alphas"));
      const BasicBAlpha bb = build_balpha(k, ba.base.group(), ba.coords, parse_alpha_list(k, o.betas, "--betas"));
      const LinearizedMap l = build_L(ba, bb);
      out << map_lines(l.morphism.map) << "equivariant " << (l.morphism.equivariant ? "yes" : "no") << "\n";
      verdict.holds = l.morphism.equivariant;
    } else if (p_point->parsed()) {
      const GAlgebra dk = load_algebra(o.file), target = load_algebra(o.file2);
      const auto elems = dk_elements(dk);
      const unsigned d = o.deg.value_or(default_point_degree(target));
      const auto pt = find_point(target, d);
      if (!pt) throw InputError("TARGET has no point of degree <= " + std::to_string(d));
      if (!(*dk.group() == *target.group())) throw InputError("DK and TARGET have different groups");
      const AlgebraMorphism mor = morphism_from_point(dk, elems, target, *pt);
      out << "POINT " << pt->element.to_string() << "\n"
          << map_lines(mor.map) << "equivariant " << (mor.equivariant ? "yes" : "no") << "\n";
      verdict.holds = mor.equivariant;
    }
  } catch (const std::exception& e) {
    // Input errors, invalid constructions and failed validations alike.
    err << "error: " << e.what() << "\n";
    return {2, out.str(), err.str()};
  }
  return {verdict.holds ? 0 : 1, out.str(), err.str()};
}

}  // namespace modinv

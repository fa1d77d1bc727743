// pcoset: command-line front end. Objects are read and written as JSON.
// Exit codes: 0 ok, 1 property failure or consistency error, 2 usage error.

#include "pcoset/building.hpp"
#include "pcoset/charfn.hpp"
#include "pcoset/errors.hpp"
#include "pcoset/io.hpp"
#include "pcoset/verify.hpp"
#include "pcoset/weil.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using namespace pcoset;

namespace {

struct Output {
  std::string out_file;
  std::string format = "json";
};

void emit(const Output& o, const json& j) {
  const std::string text = j.dump(2) + "\n";
  if (o.out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out_file);
  if (!f) throw InputError("cannot write '" + o.out_file + "'");
  f << text;
}

bool is_relation(const json& j) { return j.is_object() && j.contains("src"); }

Module read_module(const std::string& path) { return module_from_json(read_json_file(path)); }
BlockElement read_block(const std::string& path) { return block_from_json(read_json_file(path)); }
RatMatrix read_matrix(const std::string& path) { return matrix_from_json(read_json_file(path)); }

SymplecticForm form_for(std::size_t dim) {
  if (dim % 2 != 0) throw DimensionMismatch("symplectic form needs an even dimension, got " + std::to_string(dim));
  return SymplecticForm::standard(dim / 2);
}

// Module files use the standard form; relation files use the difference form.
SymplecticForm form_for(const json& j) {
  if (is_relation(j)) {
    const Relation r = relation_from_json(j);
    return difference_form(form_for(r.src_dim()), form_for(r.dst_dim()));
  }
  return form_for(module_from_json(j).ambient_dim());
}

Module body_of(const json& j) { return is_relation(j) ? relation_from_json(j).body() : module_from_json(j); }

json convergence_json(const ConvergenceReport& r) {
  return {{"pass", r.pass()},           {"absorbs", r.absorbs},       {"approaches", r.approaches},
          {"down_inside", r.down_inside}, {"closeness", r.closeness}, {"first_absorbing", r.first_absorbing},
          {"witnesses", r.witnesses}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pcoset: double cosets, lattices and characteristic functions over Q_p"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--out", out.out_file, "write JSON here instead of stdout");
  app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"json"}));

  std::int64_t pv = 0;
  auto need_p = [&](CLI::App* sub) { sub->add_option("--p", pv, "prime")->required(); };
  std::vector<std::string> files;
  auto take = [&](CLI::App* sub, std::size_t n, const std::string& what) {
    sub->add_option("files", files, what)->required()->expected(static_cast<int>(n));
  };

  auto* canon = app.add_subcommand("canon", "canonical form of a module or relation");
  take(canon, 1, "MODULE|RELATION");
  need_p(canon);
  auto* eq = app.add_subcommand("eq", "equality of two modules or two relations");
  take(eq, 2, "A B");
  need_p(eq);
  auto* dual_cmd = app.add_subcommand("dual", "dual module (standard form; difference form for relations)");
  take(dual_cmd, 1, "MODULE|RELATION");
  need_p(dual_cmd);
  auto* inter = app.add_subcommand("intersect", "intersection of two modules");
  take(inter, 2, "A B");
  need_p(inter);
  auto* sum_cmd = app.add_subcommand("sum", "sum of two modules");
  take(sum_cmd, 2, "A B");
  need_p(sum_cmd);
  auto* comp = app.add_subcommand("compose", "Q∘P for relations P then Q");
  take(comp, 2, "Q P");
  need_p(comp);
  auto* cmul = app.add_subcommand("coset-mul", "product of two block elements");
  take(cmul, 2, "G H");
  // named object files shared by the χ-family verbs
  std::string g_file, q_file, t_file, q2_file, t2_file, sp_file, kappa_file, tau_file, seq_file;
  std::size_t chi_m = 0, sp_alpha = 0, sp_k = 0;

  auto* chi_cmd = app.add_subcommand("chi", "characteristic function χ_g(Q, T)");
  auto* chi_g = chi_cmd->add_option("--g", g_file, "block element");
  chi_cmd->add_option("--Q", q_file, "module Q")->required();
  chi_cmd->add_option("--T", t_file, "module T")->required();
  chi_cmd->add_option("--m", chi_m, "evaluate at slot size M (pads g)");
  auto* chi_sp_opt = chi_cmd->add_option("--sp", sp_file, "symplectic representative instead of --g");
  chi_cmd->add_option("--alpha", sp_alpha, "alpha for --sp");
  chi_cmd->add_option("--k", sp_k, "k for --sp");
  chi_g->excludes(chi_sp_opt);
  need_p(chi_cmd);
  auto* bnd = app.add_subcommand("chi-boundary", "χ on graphs of symmetric κ, τ");
  bnd->add_option("--g", g_file, "block element")->required();
  bnd->add_option("--kappa", kappa_file, "symmetric k×k matrix")->required();
  bnd->add_option("--tau", tau_file, "symmetric k×k matrix")->required();
  need_p(bnd);
  auto* lam = app.add_subcommand("lambda", "Λ(g); with Q and T also the sandwich comparison");
  lam->add_option("--g", g_file, "block element")->required();
  lam->add_option("--Q", q_file, "module Q");
  lam->add_option("--T", t_file, "module T");
  lam->add_option("--p", pv, "prime");
  auto* cls = app.add_subcommand("classify", "self-dual / almost self-dual / neither");
  take(cls, 1, "MODULE");
  need_p(cls);
  auto* nb = app.add_subcommand("neighbors", "almost self-dual lattices between O^{2n} and p^{-1}O^{2n}");
  std::size_t nb_n = 1;
  nb->add_option("--n", nb_n, "half dimension")->check(CLI::Range(1, 2));
  need_p(nb);
  auto* morph = app.add_subcommand("morphism-check", "χ(Q,T) ⊇ χ(Q',T') for Q ⊇ Q', T ⊇ T'");
  morph->add_option("--g", g_file, "block element")->required();
  morph->add_option("--Q", q_file, "module Q")->required();
  morph->add_option("--T", t_file, "module T")->required();
  morph->add_option("--Q2", q2_file, "module Q' inside Q")->required();
  morph->add_option("--T2", t2_file, "module T' inside T")->required();
  need_p(morph);
  auto* cont = app.add_subcommand("continuity", "χ(Q_j, T) against χ(Q∞, T)");
  cont->add_option("--g", g_file, "block element")->required();
  cont->add_option("--T", t_file, "module T")->required();
  cont->add_option("--seq", seq_file, "{\"sequence\": [modules], \"limit\": module}; default Q_j = p^{-j}O ⊕ p^j O");
  int cont_count = 7, cont_depth = 4;
  cont->add_option("--count", cont_count, "length of the default sequence")->check(CLI::Range(2, 64));
  cont->add_option("--depth", cont_depth, "probe depth")->check(CLI::Range(0, 32));
  need_p(cont);
  auto* weil = app.add_subcommand("weil", "finite-level Heisenberg and Weil operators");
  std::string weil_op;
  std::vector<std::string> weil_args;
  int weil_n = 1;
  weil->add_option("op", weil_op, "fourier | diag A | upper B | heis V+ V- | factor FILE | of FILE | lambda | theta")
      ->required()
      ->check(CLI::IsMember({"fourier", "diag", "upper", "heis", "factor", "of", "lambda", "theta"}));
  weil->add_option("args", weil_args, "operator arguments");
  weil->add_option("--N", weil_n, "depth of the finite model")->check(CLI::Range(1, 3));
  need_p(weil);
  auto* ver = app.add_subcommand("verify", "seeded property suites");
  std::string suite = "all";
  SuiteConfig cfg;
  ver->add_option("suite", suite, "suite name")->check(CLI::IsMember(suite_names()));
  ver->add_option("--p", cfg.primes, "primes")->delimiter(',');
  ver->add_option("--trials", cfg.trials, "trials per property")->check(CLI::PositiveNumber);
  ver->add_option("--seed", cfg.seed, "seed");
  bool timing = false;
  ver->add_flag("--timing", timing, "include wall-clock times in the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto prime = [&] { return Prime::checked(pv); };

    if (canon->parsed()) {
      const json j = read_json_file(files[0]);
      emit(out, is_relation(j) ? relation_to_json(canonicalize(relation_from_json(j), prime()))
                               : module_to_json(canonicalize(module_from_json(j), prime())));
    } else if (eq->parsed()) {
      const json a = read_json_file(files[0]), b = read_json_file(files[1]);
      if (is_relation(a) != is_relation(b)) throw InputError("eq: cannot compare a module with a relation");
      const bool same = is_relation(a) ? equal(relation_from_json(a), relation_from_json(b), prime())
                                       : equal(module_from_json(a), module_from_json(b), prime());
      emit(out, {{"equal", same}});
    } else if (dual_cmd->parsed()) {
      const json j = read_json_file(files[0]);
      const Module d = dual(body_of(j), form_for(j), prime());
      if (is_relation(j)) {
        const Relation r = relation_from_json(j);
        emit(out, relation_to_json(Relation(r.src_dim(), r.dst_dim(), d)));
      } else {
        emit(out, module_to_json(d));
      }
    } else if (inter->parsed()) {
      emit(out, module_to_json(intersect(read_module(files[0]), read_module(files[1]), prime())));
    } else if (sum_cmd->parsed()) {
      emit(out, module_to_json(sum(read_module(files[0]), read_module(files[1]), prime())));
    } else if (comp->parsed()) {
      const Relation q = relation_from_json(read_json_file(files[0]));
      const Relation p = relation_from_json(read_json_file(files[1]));
      emit(out, relation_to_json(compose(q, p, prime())));
    } else if (cmul->parsed()) {
      emit(out, block_to_json(coset_mul(read_block(files[0]), read_block(files[1]))));
    } else if (chi_cmd->parsed()) {
      const Module q = read_module(q_file), t = read_module(t_file);
      if (!sp_file.empty()) {
        if (sp_alpha == 0 || sp_k == 0 || chi_m == 0) throw InputError("chi --sp needs --alpha, --k and --m");
        emit(out, relation_to_json(chi_sp(read_matrix(sp_file), sp_alpha, sp_k, chi_m, q, t, prime())));
      } else {
        if (g_file.empty()) throw InputError("chi needs --g or --sp");
        BlockElement g = read_block(g_file);
        if (chi_m != 0) {
          if (chi_m < g.m()) throw InputError("chi: --m is smaller than the slot size of g");
          g = pad(g, chi_m);
        }
        emit(out, relation_to_json(chi(g, q, t, prime())));
      }
    } else if (bnd->parsed()) {
      const BlockElement g = read_block(g_file);
      const BoundaryPair bp{read_matrix(kappa_file), read_matrix(tau_file)};
      try {
        const BoundaryResult r = chi_boundary(g, bp, prime());
        json j = {{"kind", r.map ? "symplectic" : "relation"},
                  {"relation", relation_to_json(r.relation)},
                  {"z", matrix_to_json(r.z)}};
        if (r.map) j["map"] = matrix_to_json(*r.map);
        emit(out, j);
      } catch (const SingularBoundary& e) {
        emit(out, {{"kind", "singular"}, {"error", e.what()}});
        return 1;
      }
    } else if (lam->parsed()) {
      const BlockElement g = read_block(g_file);
      json j = {{"lambda", matrix_to_json(lambda_subspace(g))}};
      if (!q_file.empty() || !t_file.empty()) {
        if (q_file.empty() || t_file.empty()) throw InputError("lambda: give both --Q and --T");
        const SandwichReport r = lambda_sandwich_check(g, read_module(q_file), read_module(t_file), prime());
        j["sandwich"] = {{"pass", r.pass()},          {"lattices", r.lattices}, {"down_contains", r.down_contains},
                         {"up_contained", r.up_contained}, {"down_equal", r.down_equal}, {"up_equal", r.up_equal}};
        emit(out, j);
        return r.pass() ? 0 : 1;
      }
      emit(out, j);
    } else if (cls->parsed()) {
      const Module r = read_module(files[0]);
      emit(out, {{"class", to_string(classify(r, form_for(r.ambient_dim()), prime()))}});
    } else if (nb->parsed()) {
      json list = json::array();
      for (const Module& m : neighbors_over(nb_n, prime())) list.push_back(module_to_json(m));
      emit(out, {{"count", list.size()}, {"modules", list}});
    } else if (morph->parsed()) {
      const MorphismReport r = chi_graph_morphism_check(read_block(g_file), read_module(q_file),
                                                        read_module(t_file), read_module(q2_file),
                                                        read_module(t2_file), prime());
      emit(out, {{"pass", r.pass()},
                 {"equal", r.equal},
                 {"contains", r.contains},
                 {"source_almost", r.source_almost},
                 {"target_almost", r.target_almost}});
      return r.pass() ? 0 : 1;
    } else if (cont->parsed()) {
      const Prime p = prime();
      std::vector<Module> seq;
      Module lim;
      if (seq_file.empty()) {
        seq = standard_continuity_sequence(cont_count, p);
        lim = standard_continuity_limit();
      } else {
        const json j = read_json_file(seq_file);
        if (!j.contains("sequence") || !j["sequence"].is_array() || !j.contains("limit"))
          throw InputError("--seq: expected {\"sequence\": [...], \"limit\": ...}");
        for (const json& m : j["sequence"]) seq.push_back(module_from_json(m));
        lim = module_from_json(j["limit"]);
      }
      const ConvergenceReport r = continuity_check(read_block(g_file), seq, lim, read_module(t_file), cont_depth, p);
      emit(out, convergence_json(r));
      return r.pass() ? 0 : 1;
    } else if (weil->parsed()) {
      const Prime p = prime();
      if (p.value() == 2) throw InputError("weil: p = 2 is not supported");
      const FiniteModel model(p, weil_n);
      auto arg = [&](std::size_t i) {
        if (weil_args.size() <= i) throw InputError("weil " + weil_op + ": missing argument");
        return weil_args[i];
      };
      auto tokens_of = [&](const RatMatrix& g) {
        json tokens = json::array();
        for (const Sl2Token& t : sl2_factor(g, p)) tokens.push_back(to_string(t));
        return tokens;
      };
      json j = {{"p", p.value()}, {"N", weil_n}};
      if (weil_op == "fourier") {
        j["operator"] = complex_matrix_to_json(weil_fourier(model));
      } else if (weil_op == "diag") {
        j["operator"] = complex_matrix_to_json(weil_diag(model, parse_rational(arg(0))));
      } else if (weil_op == "upper") {
        j["operator"] = complex_matrix_to_json(weil_upper(model, parse_rational(arg(0))));
      } else if (weil_op == "heis") {
        j["operator"] = complex_matrix_to_json(heis_op(model, parse_rational(arg(0)), parse_rational(arg(1))));
      } else if (weil_op == "factor") {
        j["tokens"] = tokens_of(read_matrix(arg(0)));
      } else if (weil_op == "of") {
        const RatMatrix g = read_matrix(arg(0));
        j["tokens"] = tokens_of(g);
        j["operator"] = complex_matrix_to_json(weil_of(model, g));
      } else {
        const FiniteModel dst(p, weil_n, 2);
        j["operator"] = complex_matrix_to_json(weil_op == "lambda" ? lambda_op(model, dst) : theta_op(model, dst));
      }
      j["dim"] = weil_op == "theta" ? FiniteModel(p, weil_n, 2).dim() : model.dim();
      emit(out, j);
    } else if (ver->parsed()) {
      const SuiteReport r = run_suite(suite, cfg);
      emit(out, r.to_json(timing));
      std::cerr << r.name << ": " << r.trials << " trials, " << r.failures << " failures, " << r.wall_time << " s\n";
      return r.pass() ? 0 : 1;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include "minaff/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <optional>
#include <string>

#include "minaff/affinization.hpp"
#include "minaff/char_ring.hpp"
#include "minaff/error.hpp"
#include "minaff/graded.hpp"
#include "minaff/json_io.hpp"
#include "minaff/lweight.hpp"
#include "minaff/root_data.hpp"
#include "minaff/verify.hpp"

namespace minaff::cli {

namespace {

using io::json;

struct Args {
  std::string type;
  std::string lambda;
  std::string mu;
  std::string eps = "+1";
  std::int64_t anchor = 0;
  std::optional<int> k;
  std::string format = "json";
  std::string lweight;
  std::string other;
  int node = 1;
  std::int64_t m = 0;
  std::int64_t m3 = 0;
  std::int64_t m4 = 0;
  std::int64_t s = 0;
  std::int64_t r = 1;
  std::optional<std::int64_t> window;
  VerifyOptions verify;
};

RootSystem system_of(const Args& a) { return RootSystem(LieType::parse(a.type)); }

Weight weight_of(const RootSystem& rs, const std::string& text, const char* flag) {
  Weight w = io::parse_weight(text);
  if (w.rank() != static_cast<std::size_t>(rs.rank()))
    throw Error(ErrorCode::InvalidArgument, std::string(flag) + " needs " + std::to_string(rs.rank()) +
                                                " entries for " + rs.to_string());
  return w;
}

Weight dominant_weight_of(const RootSystem& rs, const std::string& text, const char* flag) {
  Weight w = weight_of(rs, text, flag);
  if (!w.is_dominant()) throw Error(ErrorCode::NotDominant, std::string(flag) + " must be dominant");
  return w;
}

int eps_of(const std::string& text) {
  const auto v = io::parse_int_list(text);
  if (v.size() != 1 || (v[0] != 1 && v[0] != -1))
    throw Error(ErrorCode::InvalidArgument, "--eps must be +1 or -1");
  return static_cast<int>(v[0]);
}

void check_node(const RootSystem& rs, int node) {
  if (node < 1 || node > rs.rank())
    throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(node) + " is not in " + rs.to_string());
}

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

bool csv(const Args& a) { return a.format == "csv"; }

CLI::Option* add_type(CLI::App* c, Args& a) { return c->add_option("--type", a.type, "A3, B4, ...")->required(); }

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal affinizations of classical quantum groups: characters and l-weights", "minaff"};
  app.require_subcommand(1);
  Args a;
  std::function<void()> action;
  auto on = [&](CLI::App* c, std::function<void()> fn) { c->callback([&action, fn] { action = fn; }); };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", a.format)->check(CLI::IsMember({"json", "csv"}));
  };

  auto* ch = app.add_subcommand("char", "Character of V(lambda)");
  add_type(ch, a);
  ch->add_option("--lambda", a.lambda)->required();
  add_format(ch);
  on(ch, [&] {
    const auto rs = system_of(a);
    const auto c = irreducible_character(rs, dominant_weight_of(rs, a.lambda, "--lambda"));
    if (csv(a)) out << io::character_csv(c);
    else emit(out, io::to_json(c));
  });

  auto* dim = app.add_subcommand("dim", "Dimension of V(lambda)");
  add_type(dim, a);
  dim->add_option("--lambda", a.lambda)->required();
  on(dim, [&] {
    const auto rs = system_of(a);
    emit(out, {{"dim", io::bigint_to_json(weyl_dimension(rs, dominant_weight_of(rs, a.lambda, "--lambda")))}});
  });

  auto* tensor = app.add_subcommand("tensor", "Decomposition of V(lambda) (x) V(mu)");
  add_type(tensor, a);
  tensor->add_option("--lambda", a.lambda)->required();
  tensor->add_option("--mu", a.mu)->required();
  add_format(tensor);
  on(tensor, [&] {
    const auto rs = system_of(a);
    const auto prod = multiply(irreducible_character(rs, dominant_weight_of(rs, a.lambda, "--lambda")),
                               irreducible_character(rs, dominant_weight_of(rs, a.mu, "--mu")));
    auto parts = decompose(rs, prod);
    std::sort(parts.begin(), parts.end());
    if (csv(a)) out << io::constituents_csv(rs, parts);
    else emit(out, {{"constituents", io::to_json(parts)}});
  });

  auto* minaff = app.add_subcommand("minaff", "Minimal affinizations");
  minaff->require_subcommand(1);
  auto* construct = minaff->add_subcommand("construct", "Highest l-weight of a minimal affinization");
  add_type(construct, a);
  construct->add_option("--lambda", a.lambda)->required();
  construct->add_option("--eps", a.eps);
  construct->add_option("--anchor", a.anchor);
  construct->add_option("--k", a.k, "D4 distinguished leg")->check(CLI::IsMember({1, 3, 4}));
  on(construct, [&] {
    const auto rs = system_of(a);
    const MinAffSpec spec{dominant_weight_of(rs, a.lambda, "--lambda"), a.anchor, eps_of(a.eps)};
    if (a.k) {
      if (!(rs.type() == LieType{Series::D, 4}))
        throw Error(ErrorCode::InvalidArgument, "--k only applies to D4");
      emit(out, io::to_json(construct_minaff_D4(rs, spec, *a.k)));
    } else {
      emit(out, io::to_json(construct_minaff(rs, spec)));
    }
  });
  auto* check = minaff->add_subcommand("check", "Recognize a minimal affinization");
  add_type(check, a);
  check->add_option("--lweight", a.lweight, "[[i,s,mult],...]")->required();
  on(check, [&] { emit(out, io::to_json(is_minaff(system_of(a), io::parse_lweight(a.lweight)))); });

  auto* graded = app.add_subcommand("graded", "Graded character of the restricted limit");
  add_type(graded, a);
  graded->add_option("--lambda", a.lambda)->required();
  add_format(graded);
  on(graded, [&] {
    const auto rs = system_of(a);
    const auto g = graded_character(rs, dominant_weight_of(rs, a.lambda, "--lambda"));
    if (csv(a)) out << io::graded_csv(rs, g);
    else emit(out, io::to_json(g));
  });

  auto* graded_mk = app.add_subcommand("graded-mk", "Graded character of M_k(lambda) in type D4");
  add_type(graded_mk, a);
  graded_mk->add_option("--lambda", a.lambda)->required();
  graded_mk->add_option("--k", a.k)->required()->check(CLI::IsMember({1, 3, 4}));
  add_format(graded_mk);
  on(graded_mk, [&] {
    const auto rs = system_of(a);
    const auto g = graded_character_Mk(rs, dominant_weight_of(rs, a.lambda, "--lambda"), *a.k);
    if (csv(a)) out << io::graded_csv(rs, g);
    else emit(out, io::to_json(g));
  });

  auto* spinpair = app.add_subcommand("spinpair", "D4 module with highest weight m3 w3 + m4 w4");
  add_type(spinpair, a);
  spinpair->add_option("--m3", a.m3)->required()->check(CLI::NonNegativeNumber);
  spinpair->add_option("--m4", a.m4)->required()->check(CLI::NonNegativeNumber);
  add_format(spinpair);
  on(spinpair, [&] {
    const auto rs = system_of(a);
    const auto g = spin_pair_character(rs, a.m3, a.m4);
    if (csv(a)) out << io::graded_csv(rs, g);
    else emit(out, io::to_json(g));
  });

  auto* kr = app.add_subcommand("kr", "Graded character of a Kirillov-Reshetikhin module");
  add_type(kr, a);
  kr->add_option("--node", a.node)->required();
  kr->add_option("--m", a.m)->required()->check(CLI::NonNegativeNumber);
  add_format(kr);
  on(kr, [&] {
    const auto rs = system_of(a);
    check_node(rs, a.node);
    const auto g = kr_graded_character(rs, a.node, a.m);
    if (csv(a)) out << io::graded_csv(rs, g);
    else emit(out, io::to_json(g));
  });

  auto* lw = app.add_subcommand("lweight", "l-weight arithmetic");
  lw->require_subcommand(1);
  auto lw_op = [&](const char* name, const char* help) { return lw->add_subcommand(name, help); };

  auto* lmul = lw_op("multiply", "Product of two l-weights");
  lmul->add_option("--a", a.lweight)->required();
  lmul->add_option("--b", a.other)->required();
  on(lmul, [&] { emit(out, io::to_json(io::parse_lweight(a.lweight) * io::parse_lweight(a.other))); });

  auto* linv = lw_op("invert", "Inverse of an l-weight");
  linv->add_option("--a", a.lweight)->required();
  on(linv, [&] { emit(out, io::to_json(io::parse_lweight(a.lweight).inverse())); });

  auto* lstar = lw_op("star", "The involution lambda -> lambda*");
  add_type(lstar, a);
  lstar->add_option("--a", a.lweight)->required();
  on(lstar, [&] { emit(out, io::to_json(star(system_of(a), io::parse_lweight(a.lweight)))); });

  auto* lcostar = lw_op("costar", "The involution lambda -> lambda* with negated exponents");
  add_type(lcostar, a);
  lcostar->add_option("--a", a.lweight)->required();
  on(lcostar, [&] { emit(out, io::to_json(costar(system_of(a), io::parse_lweight(a.lweight)))); });

  auto* lwt = lw_op("wt", "Weight of an l-weight");
  add_type(lwt, a);
  lwt->add_option("--a", a.lweight)->required();
  on(lwt, [&] { emit(out, io::to_json(wt(system_of(a), io::parse_lweight(a.lweight)))); });

  auto* lq = lw_op("qstring", "q-string omega_{i,a q^s, r}");
  add_type(lq, a);
  lq->add_option("--node", a.node)->required();
  lq->add_option("--s", a.s)->required();
  lq->add_option("--r", a.r)->required()->check(CLI::NonNegativeNumber);
  on(lq, [&] {
    const auto rs = system_of(a);
    check_node(rs, a.node);
    emit(out, io::to_json(q_string(rs, a.node, a.s, a.r)));
  });

  auto* lroot = lw_op("lroot", "Simple l-root alpha_{i, a q^s}");
  add_type(lroot, a);
  lroot->add_option("--node", a.node)->required();
  lroot->add_option("--s", a.s)->required();
  on(lroot, [&] {
    const auto rs = system_of(a);
    check_node(rs, a.node);
    emit(out, io::to_json(simple_lroot(rs, a.node, a.s)));
  });

  auto* leq = lw_op("leq", "l-dominance mu <= lambda, with a certificate");
  add_type(leq, a);
  leq->add_option("--mu", a.lweight)->required();
  leq->add_option("--lambda", a.other)->required();
  leq->add_option("--window", a.window);
  on(leq, [&] {
    const auto cert = l_dominance_leq(system_of(a), io::parse_lweight(a.lweight), io::parse_lweight(a.other), a.window);
    json j = {{"leq", cert.has_value()}};
    if (cert) j["certificate"] = io::to_json(*cert);
    emit(out, j);
  });

  auto* lfac = lw_op("factorize", "q-string factorization of one node");
  add_type(lfac, a);
  lfac->add_option("--node", a.node)->required();
  lfac->add_option("--a", a.lweight)->required();
  on(lfac, [&] {
    const auto rs = system_of(a);
    check_node(rs, a.node);
    const auto strings = string_factorize(rs, a.node, io::parse_lweight(a.lweight).exponents(a.node));
    json j = json::array();
    for (const auto& [s, r] : strings) j.push_back({{"s", s}, {"r", r}});
    emit(out, j);
  });

  auto* lfm = lw_op("fm", "Lowering exponents b = s + d_i (r - 1)");
  add_type(lfm, a);
  lfm->add_option("--node", a.node)->required();
  lfm->add_option("--a", a.lweight)->required();
  on(lfm, [&] {
    const auto rs = system_of(a);
    check_node(rs, a.node);
    emit(out, json(fm_lowering_exponents(rs, io::parse_lweight(a.lweight), a.node)));
  });

  auto* lsl2 = lw_op("sl2", "l-character of the sl2 module with highest l-weight omega_{1, a q^s, r}");
  lsl2->add_option("--s", a.s)->required();
  lsl2->add_option("--r", a.r)->required()->check(CLI::NonNegativeNumber);
  on(lsl2, [&] {
    json j = json::array();
    for (const auto& t : sl2_lcharacter(a.s, a.r)) j.push_back(io::to_json(t));
    emit(out, j);
  });

  int verify_exit = 0;
  auto* ver = app.add_subcommand("verify", "Run the built-in invariant checks");
  ver->add_option("--suite", a.verify.suite)->check(CLI::IsMember({"root", "char", "lweight", "minaff", "graded", "all"}));
  ver->add_option("--max-rank", a.verify.max_rank)->check(CLI::Range(1, 8));
  ver->add_option("--grid", a.verify.grid, "e.g. B3:m<=3");
  ver->add_option("--seed", a.verify.seed);
  on(ver, [&] {
    const auto report = run_verify(a.verify);
    emit(out, report.to_json());
    verify_exit = report.failures.empty() ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "InvalidArgument"}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    action();
  } catch (const Error& e) {
    err << json{{"error", std::string(error_code_name(e.code()))}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << json{{"error", "Internal"}, {"detail", e.what()}}.dump() << "\n";
    return 1;
  }
  return verify_exit;
}

}  // namespace minaff::cli

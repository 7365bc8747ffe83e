// qchar: batch front end over the qchar core library. Every command prints
// one JSON document; exit status is 0 on success/pass, 1 when a verification
// fails and 2 on usage or domain errors.

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qchar/blocks.hpp"
#include "qchar/boundary.hpp"
#include "qchar/characters.hpp"
#include "qchar/combinatorics.hpp"
#include "qchar/json_io.hpp"
#include "qchar/schur.hpp"

namespace {

using qchar::json::json;
namespace qj = qchar::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Outcome {
  json body;
  int status = kPass;
};

struct RunConfig {
  std::string q = "1/2";
  int level = 1;
  int truncation = 1;
  double tolerance = 1e-12;
  std::uint64_t seed = 0;
  std::string output;
};

/// Inline JSON, or "@path" to read it from a file.
json load_json(const std::string& text) {
  std::string source = text;
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) {
      throw std::invalid_argument("cannot read " + text.substr(1));
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    source = buffer.str();
  }
  try {
    return json::parse(source);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<qchar::Rational> read_points(const json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("points must be a JSON array of \"p/q\" strings");
  }
  std::vector<qchar::Rational> points;
  for (const json& p : j) {
    points.push_back(qj::read_rational(p));
  }
  return points;
}

std::vector<std::complex<double>> read_torus(const json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("torus points must be an array of [re, im] pairs");
  }
  std::vector<std::complex<double>> z;
  for (const json& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw std::invalid_argument("torus points must be an array of [re, im] pairs");
    }
    z.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  return z;
}

void require_levels(const RunConfig& cfg) {
  if (cfg.level < 1 || cfg.truncation < cfg.level) {
    throw std::invalid_argument("need 1 <= level <= trunc");
  }
}

int emit(const Outcome& outcome, const std::string& path) {
  const std::string text = outcome.body.dump() + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(path);
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return kUsage;
    }
    out << text;
  }
  return outcome.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quantized-character calculus for U_q(N)"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string sig_text;
  std::string lambda_text;
  std::string mu_text;
  std::string points_text;
  std::string char_text;
  std::string other_text;
  std::string theta_text;
  std::string family_text;
  std::string target_text;
  std::string x_text;
  std::string y_text;
  std::string densities_text;
  std::string targets_text;
  int k = 0;
  int trials = 0;
  bool use_oracle = false;

  std::function<Outcome()> action;

  auto add_q = [&](CLI::App* cmd) {
    cmd->add_option("--q", cfg.q, "Deformation parameter as \"p/q\" in (0,1)")->default_val("1/2");
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", cfg.output, "Write JSON here instead of standard output");
  };

  // qdim
  auto* qdim_cmd = app.add_subcommand("qdim", "Quantum dimension of a signature");
  add_q(qdim_cmd);
  qdim_cmd->add_option("--sig", sig_text, "Signature, e.g. [1,0]")->required();
  qdim_cmd->callback([&] {
    action = [&] {
      const auto q = qchar::parse_q(cfg.q);
      return Outcome{{{"value", qj::write(qchar::qdim(qj::read_signature(load_json(sig_text)), q))}}};
    };
  });

  // schur-eval
  auto* schur_cmd = app.add_subcommand("schur-eval", "Evaluate a Schur Laurent polynomial");
  schur_cmd->add_option("--sig", sig_text, "Signature")->required();
  schur_cmd->add_option("--points", points_text, "JSON array of nonzero \"p/q\"")->required();
  schur_cmd->add_flag("--oracle", use_oracle, "Use the GT-pattern sum instead of the bialternant");
  schur_cmd->callback([&] {
    action = [&] {
      const auto sig = qj::read_signature(load_json(sig_text));
      const auto points = read_points(load_json(points_text));
      const auto value = use_oracle ? qchar::schur_eval_gt_oracle(sig, points)
                                    : qchar::schur_eval(sig, points);
      return Outcome{{{"value", qj::write(value)}}};
    };
  });

  // lr
  auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson expansion of s_lambda * s_mu");
  lr_cmd->add_option("--lambda", lambda_text, "First signature")->required();
  lr_cmd->add_option("--mu", mu_text, "Second signature")->required();
  lr_cmd->callback([&] {
    action = [&] {
      const auto lr = qchar::lr_coefficients(qj::read_signature(load_json(lambda_text)),
                                             qj::read_signature(load_json(mu_text)));
      return Outcome{{{"coefficients", qj::write(lr)}}};
    };
  });

  // cotransition
  auto* cot_cmd = app.add_subcommand("cotransition", "Cotransition row Lambda(nu, .)");
  add_q(cot_cmd);
  cot_cmd->add_option("--sig", sig_text, "Upper signature nu")->required();
  cot_cmd->callback([&] {
    action = [&] {
      const auto q = qchar::parse_q(cfg.q);
      const auto row = qchar::cotransition(qj::read_signature(load_json(sig_text)), q);
      return Outcome{{{"rows", qj::write_rows(row)}}};
    };
  });

  // restrict
  auto* restrict_cmd = app.add_subcommand("restrict", "Push a level-(N+1) character down to level N");
  restrict_cmd->add_option("--char", char_text, "Character JSON (inline or @file)")->required();
  restrict_cmd->callback([&] {
    action = [&] {
      return Outcome{qj::write(qchar::restrict_character(qj::read_character(load_json(char_text))))};
    };
  });

  // tensor
  auto* tensor_cmd = app.add_subcommand("tensor", "Tensor product of two characters");
  tensor_cmd->add_option("--a", char_text, "First character")->required();
  tensor_cmd->add_option("--b", other_text, "Second character")->required();
  tensor_cmd->callback([&] {
    action = [&] {
      return Outcome{qj::write(qchar::tensor(qj::read_character(load_json(char_text)),
                                             qj::read_character(load_json(other_text))))};
    };
  });

  // sgf-eval
  auto* sgf_cmd = app.add_subcommand("sgf-eval", "Exact q-Schur generating function");
  sgf_cmd->add_option("--char", char_text, "Character")->required();
  sgf_cmd->add_option("--points", points_text, "JSON array of nonzero \"p/q\"")->required();
  sgf_cmd->callback([&] {
    action = [&] {
      const auto chi = qj::read_character(load_json(char_text));
      return Outcome{{{"value", qj::write(qchar::sgf_eval(chi, read_points(load_json(points_text))))}}};
    };
  });

  // sgf-torus
  auto* torus_cmd = app.add_subcommand("sgf-torus", "Generating function on the torus (double precision)");
  torus_cmd->add_option("--char", char_text, "Character")->required();
  torus_cmd->add_option("--z", points_text, "JSON array of [re, im] unit-modulus pairs")->required();
  torus_cmd->add_option("--tolerance", cfg.tolerance, "Allowed | |z| - 1 |")->default_val(1e-12);
  torus_cmd->callback([&] {
    action = [&] {
      if (!(cfg.tolerance > 0)) {
        throw std::invalid_argument("tolerance must be positive");
      }
      const auto chi = qj::read_character(load_json(char_text));
      const auto value = qchar::sgf_eval_torus(chi, read_torus(load_json(points_text)), cfg.tolerance);
      return Outcome{{{"re", value.real()}, {"im", value.imag()}, {"abs", std::abs(value)}}};
    };
  });

  // coherent-check
  auto* coherent_cmd = app.add_subcommand("coherent-check", "Check q-coherence of consecutive levels");
  coherent_cmd->add_option("--family", family_text,
                           "{\"q\": \"p/q\", \"measures\": [character, ...]} (inline or @file)")
      ->required();
  coherent_cmd->callback([&] {
    action = [&] {
      const json j = load_json(family_text);
      if (!j.is_object() || !j.contains("q") || !j.contains("measures") || !j["measures"].is_array()) {
        throw std::invalid_argument("family needs \"q\" and a \"measures\" array");
      }
      qchar::CoherentFamily family{qchar::QParam(qj::read_rational(j["q"])), {}};
      for (const json& m : j["measures"]) {
        family.measures.push_back(qj::read_character(m));
      }
      const auto report = qchar::is_coherent(family);
      return Outcome{qj::write(report), report.coherent ? kPass : kFail};
    };
  });

  // extreme
  auto* extreme_cmd = app.add_subcommand("extreme", "Finite-level approximant of an extreme character");
  add_q(extreme_cmd);
  extreme_cmd->add_option("--theta", theta_text, "{\"head\": [...], \"tail\": t}")->required();
  extreme_cmd->add_option("--level", cfg.level, "Level N")->required();
  extreme_cmd->add_option("--trunc", cfg.truncation, "Truncation L >= N")->required();
  extreme_cmd->callback([&] {
    action = [&] {
      require_levels(cfg);
      const auto q = qchar::parse_q(cfg.q);
      const auto theta = qj::read_boundary(load_json(theta_text));
      const auto approx = qchar::extreme_character(theta, cfg.level, cfg.truncation, q);
      const auto gap = qchar::cauchy_gap(theta, cfg.level, cfg.truncation, q);
      return Outcome{{{"theta", qj::write(theta)},
                      {"level", cfg.level},
                      {"trunc", cfg.truncation},
                      {"measure", qj::write(approx.measure)},
                      {"gap", qj::write(gap)}}};
    };
  });

  // ak
  auto* ak_cmd = app.add_subcommand("ak", "Apply the shift A_k to a boundary parameter or a measure");
  ak_cmd->add_option("--k", k, "Shift k")->required();
  auto* ak_theta = ak_cmd->add_option("--theta", theta_text, "Boundary parameter");
  auto* ak_char = ak_cmd->add_option("--char", char_text, "Character");
  ak_theta->excludes(ak_char);
  ak_cmd->callback([&] {
    action = [&] {
      if (!theta_text.empty()) {
        return Outcome{qj::write(qchar::ak_on_theta(qj::read_boundary(load_json(theta_text)), k))};
      }
      if (!char_text.empty()) {
        return Outcome{qj::write(qchar::ak_on_measure(qj::read_character(load_json(char_text)), k))};
      }
      throw std::invalid_argument("ak needs --theta or --char");
    };
  });

  // verify-corollary
  auto* corollary_cmd = app.add_subcommand(
      "verify-corollary", "Check chi_theta (x) chi_(k,k,...) = chi_{A_k theta} at a truncation");
  add_q(corollary_cmd);
  corollary_cmd->add_option("--theta", theta_text, "Boundary parameter")->required();
  corollary_cmd->add_option("--k", k, "Determinant power k")->required();
  corollary_cmd->add_option("--level", cfg.level, "Level N")->required();
  corollary_cmd->add_option("--trunc", cfg.truncation, "Truncation L >= N")->required();
  corollary_cmd->add_option("--target", target_text,
                            "Replace the A_k(theta) approximant with this character");
  corollary_cmd->callback([&] {
    action = [&] {
      require_levels(cfg);
      const auto q = qchar::parse_q(cfg.q);
      const auto theta = qj::read_boundary(load_json(theta_text));
      qchar::CorollaryReport report =
          target_text.empty()
              ? qchar::verify_corollary(theta, k, cfg.level, cfg.truncation, q)
              : qchar::verify_corollary_measures(
                    qchar::extreme_character(theta, cfg.level, cfg.truncation, q).measure, k,
                    qj::read_character(load_json(target_text)));
      json body = qj::write(report);
      body["gap"] = qj::write(qchar::cauchy_gap(theta, cfg.level, cfg.truncation, q));
      return Outcome{body, report.pass ? kPass : kFail};
    };
  });

  // kms-check
  auto* kms_cmd = app.add_subcommand("kms-check", "Check the KMS identity chi(x F y F^-1) = chi(y x)");
  auto* kms_state = kms_cmd->add_option("--state", char_text, "Character used as the state");
  auto* kms_dens = kms_cmd->add_option("--densities", densities_text,
                                       "Block-element JSON of densities (arbitrary functional)");
  kms_state->excludes(kms_dens);
  kms_cmd->add_option("--x", x_text, "Block element x (omit with --trials for random pairs)");
  kms_cmd->add_option("--y", y_text, "Block element y");
  kms_cmd->add_option("--trials", trials, "Random (x, y) pairs on the state's support")->default_val(0);
  kms_cmd->add_option("--seed", cfg.seed, "Seed for random pairs")->default_val(0);
  kms_cmd->callback([&] {
    action = [&]() -> Outcome {
      std::map<qchar::Signature, qchar::RationalMatrix> densities;
      std::optional<qchar::BlockState> state;
      int level = 0;
      std::optional<qchar::QParam> q;
      if (!char_text.empty()) {
        state.emplace(qj::read_character(load_json(char_text)));
        densities = state->densities();
        level = state->level();
        q = state->q();
      } else if (!densities_text.empty()) {
        const auto d = qj::read_block_element(load_json(densities_text));
        densities = d.blocks();
        level = d.level();
        q = d.q();
      } else {
        throw std::invalid_argument("kms-check needs --state or --densities");
      }
      auto check = [&](const qchar::BlockElement& x, const qchar::BlockElement& y) -> Outcome {
        const auto lhs = qchar::density_eval(densities, x * qchar::scaling(y, 1));
        const auto rhs = qchar::density_eval(densities, y * x);
        const bool pass = state ? qchar::kms_check(*state, x, y) : lhs == rhs;
        return {{{"pass", pass}, {"lhs", qj::write(lhs)}, {"rhs", qj::write(rhs)}},
                pass ? kPass : kFail};
      };
      if (!x_text.empty() || !y_text.empty()) {
        if (x_text.empty() || y_text.empty()) {
          throw std::invalid_argument("kms-check needs both --x and --y");
        }
        return check(qj::read_block_element(load_json(x_text)),
                     qj::read_block_element(load_json(y_text)));
      }
      if (trials <= 0) {
        throw std::invalid_argument("kms-check needs --x/--y or --trials > 0");
      }
      std::mt19937_64 rng(cfg.seed);
      std::uniform_int_distribution<int> entry(-5, 5);
      auto random_element = [&] {
        qchar::BlockElement::Blocks blocks;
        for (const auto& [sig, rho] : densities) {
          qchar::RationalMatrix m(rho.rows(), rho.cols());
          for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
              m(i, j) = entry(rng);
            }
          }
          blocks.emplace(sig, std::move(m));
        }
        return qchar::BlockElement(level, *q, std::move(blocks));
      };
      for (int t = 0; t < trials; ++t) {
        const auto x = random_element();
        const auto y = random_element();
        Outcome o = check(x, y);
        if (o.status != kPass) {
          o.body["trial"] = t;
          o.body["x"] = qj::write(x);
          o.body["y"] = qj::write(y);
          return o;
        }
      }
      return Outcome{{{"pass", true}, {"trials", trials}}};
    };
  });

  // f-compat
  auto* fcompat_cmd = app.add_subcommand("f-compat", "Check F_nu restricts to w_q(lambda,nu) F_lambda");
  add_q(fcompat_cmd);
  fcompat_cmd->add_option("--sig", sig_text, "Signature nu of level >= 2")->required();
  fcompat_cmd->callback([&] {
    action = [&] {
      const auto report = qchar::check_f_compatibility(qj::read_signature(load_json(sig_text)),
                                                       qchar::parse_q(cfg.q));
      return Outcome{qj::write(report), report.pass ? kPass : kFail};
    };
  });

  // decompose
  auto* decompose_cmd = app.add_subcommand("decompose", "Decompose block densities into indecomposable states");
  decompose_cmd->add_option("--densities", densities_text, "Block-element JSON of densities")->required();
  decompose_cmd->callback([&] {
    action = [&] {
      const auto d = qj::read_block_element(load_json(densities_text));
      const auto result = qchar::decompose_state(d.blocks(), d.q());
      return Outcome{qj::write(result), result.accepted ? kPass : kFail};
    };
  });

  // embed
  auto* embed_cmd = app.add_subcommand("embed", "Embed a level-N block element into level N+1");
  embed_cmd->add_option("--x", x_text, "Block element")->required();
  embed_cmd->add_option("--targets", targets_text, "JSON array of level-(N+1) signatures")->required();
  embed_cmd->callback([&] {
    action = [&] {
      const json t = load_json(targets_text);
      if (!t.is_array()) {
        throw std::invalid_argument("targets must be an array of signatures");
      }
      std::vector<qchar::Signature> targets;
      for (const json& s : t) {
        targets.push_back(qj::read_signature(s));
      }
      return Outcome{qj::write(qchar::embed(qj::read_block_element(load_json(x_text)), targets))};
    };
  });

  for (auto* cmd : app.get_subcommands({})) {
    add_output(cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    return kUsage;
  }

  try {
    return emit(action(), cfg.output);
  } catch (const std::exception& e) {
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    return kUsage;
  }
}

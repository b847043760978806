#include "report.hpp"

#include "crysref/hecke.hpp"
#include "crysref/lemmas.hpp"
#include "crysref/matrixrep.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace crysref;
using cli::Check;
using cli::RunReport;
using cli::Status;

namespace {

constexpr int kUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::optional<std::size_t> max_depth;
  std::optional<std::size_t> max_len;
};

Budget budget_from(const Options& o) {
  Budget b;
  if (o.max_depth) b.max_depth = *o.max_depth;
  if (o.max_len) b.max_word_length = *o.max_len;
  return b.scaled(budget_scale_from_env());
}

Status status_of(Verdict v) {
  switch (v) {
    case Verdict::Proved: return Status::Pass;
    case Verdict::Failed: return Status::Fail;
    default: return Status::Unknown;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Family family_arg(const std::string& name, int n) {
  Family f = parse_family(name);
  if (!family_rank_valid(f, n)) throw UsageError("invalid rank " + std::to_string(n) + " for " + name);
  return f;
}

std::string join(const std::vector<Integer>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x.str();
  return s;
}

void print(const RunReport& r, bool json) {
  if (json) {
    std::cout << nlohmann::json(r).dump(2) << "\n";
    return;
  }
  for (const auto& line : r.output) std::cout << line << "\n";
  for (const auto& c : r.checks) {
    std::cout << (c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "UNKNOWN") << "  " << c.name;
    if (!c.method.empty()) std::cout << "  [" << c.method << "]";
    if (!c.detail.empty()) std::cout << "  " << c.detail;
    std::cout << "\n";
  }
  if (!r.checks.empty()) {
    std::size_t pass = 0;
    for (const auto& c : r.checks) pass += c.status == Status::Pass;
    std::cout << "result: " << (r.exit_code == 0 ? "pass" : r.exit_code == 2 ? "unknown" : "fail") << " (" << pass << "/"
              << r.checks.size() << " checks, " << r.wall_time_s << " s)\n";
  }
}

Check from_verdict(const std::string& prefix, const RelatorVerdict& v, const RewriteSystem* rs, bool with_cert,
                   const Presentation* target) {
  Check c{prefix + v.relation, status_of(v.verdict), v.method, v.note, std::nullopt};
  if (v.certificate && rs) {
    auto rr = replay(*v.certificate, *rs);
    if (!rr.ok) {
      c.status = Status::Fail;
      c.detail = "certificate replay failed: " + rr.message;
    }
    if (with_cert) c.certificate = certificate_to_text(*v.certificate, *target);
  }
  return c;
}

void add_report(RunReport& r, const std::string& prefix, const HomomorphismReport& h, const RewriteSystem& rs,
                bool with_cert) {
  for (const auto& v : h.relators) r.checks.push_back(from_verdict(prefix, v, &rs, with_cert, &rs.presentation()));
}

void write_certificates(const RunReport& r, const std::string& dir) {
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  std::size_t k = 0;
  for (const auto& c : r.checks) {
    ++k;
    if (!c.certificate) continue;
    std::ofstream(std::filesystem::path(dir) / ("cert_" + std::to_string(k) + ".txt")) << *c.certificate;
  }
}

// ------------------------------------------------------------------ commands

void cmd_verify(RunReport& r, const std::string& fam, int n, const std::string& what) {
  Family f = family_arg(fam, n);
  if (!has_matrices(f)) throw UsageError("no matrix representation for " + fam);
  auto p = build_group_presentation(f, n);
  auto rep = verify_presentation(p, build_generator_matrices(f, n));
  for (const auto& c : rep.checks) {
    bool x = c.kind == RelationKind::XRelation, e = c.kind == RelationKind::ExtraOrder;
    bool take = what == "all" || (what == "x-relation" && x) || (what == "extra-order" && e) ||
                (what == "presentation" && !x && !e);
    if (!take) continue;
    r.checks.push_back({"R" + std::to_string(c.relator_index) + " " + c.word_text + " (" + to_string(c.kind) + ")",
                        c.pass ? Status::Pass : Status::Fail, "matrices", c.witness_matrix.value_or(""), std::nullopt});
  }
  if (r.checks.empty()) throw UsageError("no " + what + " relators in " + fam + " " + std::to_string(n));
}

void cmd_braid(RunReport& r, const std::string& fam, int n, const std::string& direction, bool replay_only,
               bool with_cert, int max_rank, const Budget& budget) {
  Family f = family_arg(fam, n);
  if (f != Family::C_alpha && f != Family::A_alpha) throw UsageError("braid theorem checks cover C_alpha and A_alpha");
  if (n > max_rank) throw UsageError("rank above --max-rank " + std::to_string(max_rank));
  const bool free_case = (f == Family::C_alpha && n == 1) || (f == Family::A_alpha && n == 2);
  LemmaPair lp;
  if (free_case) {
    // both sides are free of rank 3
    lp.source = build_braid_presentation(BraidSpace::FreeRank3, 1);
    lp.target = artinize(build_group_presentation(f, n));
    lp.forward = make_map(lp.source, lp.target, {{"u1", "s1"}, {"u2", "s2"}, {"u3", "s3"}});
    lp.backward = make_map(lp.target, lp.source, {{"s1", "u1"}, {"s2", "u2"}, {"s3", "u3"}});
    r.output.push_back("free group of rank 3 on both sides");
  } else {
    lp = f == Family::C_alpha ? braid_pair_c(n) : braid_pair_a(n);
  }
  RewriteSystem ra(lp.source, budget), rb(lp.target, budget);
  ProverEngine ea{&ra, &lp.backward_hints, !replay_only}, eb{&rb, &lp.forward_hints, !replay_only};
  if (direction == "both" && replay_only) {
    // composites are not part of the hint chains: they always use search
    add_report(r, "fwd: ", verify_homomorphism(lp.forward, lp.source, eb), rb, with_cert);
    add_report(r, "bwd: ", verify_homomorphism(lp.backward, lp.target, ea), ra, with_cert);
    auto composites = [&](const GeneratorMap& there, const GeneratorMap& back, const Presentation& p,
                          const RewriteSystem& rs, const std::string& prefix) {
      for (int i = 1; i <= p.generator_count(); ++i) {
        Word g{static_cast<LetterCode>(i)};
        auto v = check_equal(back.apply(there.apply(g)), g, ProverEngine{&rs, nullptr, true}, nullptr);
        v.relation = p.generator_names[static_cast<std::size_t>(i - 1)];
        r.checks.push_back(from_verdict(prefix, v, &rs, with_cert, &p));
      }
    };
    composites(lp.forward, lp.backward, lp.source, ra, "bwd*fwd: ");
    composites(lp.backward, lp.forward, lp.target, rb, "fwd*bwd: ");
    return;
  }
  if (direction == "both") {
    auto rep = verify_isomorphism_pair(lp.forward, lp.backward, lp.source, lp.target, ea, eb);
    add_report(r, "fwd: ", rep.forward, rb, with_cert);
    add_report(r, "bwd: ", rep.backward, ra, with_cert);
    for (const auto& v : rep.composites_source) r.checks.push_back(from_verdict("bwd*fwd: ", v, &ra, with_cert, &lp.source));
    for (const auto& v : rep.composites_target) r.checks.push_back(from_verdict("fwd*bwd: ", v, &rb, with_cert, &lp.target));
    if (free_case && r.checks.empty()) r.checks.push_back({"no relators on either side", Status::Pass, "free", "", {}});
    return;
  }
  if (direction == "fwd")
    add_report(r, "fwd: ", verify_homomorphism(lp.forward, lp.source, eb), rb, with_cert);
  else
    add_report(r, "bwd: ", verify_homomorphism(lp.backward, lp.target, ea), ra, with_cert);
  if (free_case && r.checks.empty()) r.checks.push_back({"no relators on either side", Status::Pass, "free", "", {}});
}

void cmd_classes(RunReport& r, const std::string& fam, int n, int bound, int depth) {
  Family f = family_arg(fam, n);
  if (!has_matrices(f)) throw UsageError("no matrix representation for " + fam);
  ClassEnumeration e;
  try {
    e = enumerate_reflection_classes(f, n, bound, depth);
  } catch (const BudgetExceeded& ex) {
    r.checks.push_back({"class enumeration", Status::Unknown, "enumeration", ex.what(), {}});
    return;
  }
  r.output.push_back(std::to_string(e.count));
  for (const auto& c : e.classes) r.output.push_back("  " + c.invariant + "  (" + std::to_string(c.size) + " found)");
  r.checks.push_back({"classes separated by invariants", e.certified ? Status::Pass : Status::Unknown, "enumeration",
                      std::to_string(e.candidates) + " candidate reflections", {}});
}

void add_specialization(RunReport& r, const SpecializationReport& s, const HeckePresentation& hp,
                        const HeckePresentation& target, const Budget& budget) {
  RewriteSystem rt(target.braid_part, budget), rh(hp.braid_part, budget);
  add_report(r, "braid fwd: ", s.forward, rt, false);
  if (s.backward) add_report(r, "braid bwd: ", *s.backward, rh, false);
  for (const auto& c : s.char_polys)
    r.checks.push_back({"charpoly " + c.generator + " -> " + c.image, c.pass ? Status::Pass : Status::Fail, "laurent",
                        c.pass ? "" : "difference " + c.difference, {}});
  r.checks.push_back(from_verdict("S0 match: ", s.extra_word, &rt, false, &target.braid_part));
  if (s.extra_char_poly)
    r.checks.push_back({"charpoly S0 -> " + s.extra_char_poly->image, s.extra_char_poly->pass ? Status::Pass : Status::Fail,
                        "laurent", s.extra_char_poly->pass ? "" : "difference " + s.extra_char_poly->difference, {}});
}

/// Whether w lies outside the commutator subgroup plus relators: its exponent sums leave the relator lattice.
bool abelian_image_nontrivial(const Presentation& p, const Word& w) {
  const std::size_t k = static_cast<std::size_t>(p.generator_count());
  auto sums = [k](const Word& x) {
    std::vector<Integer> v(k, 0);
    for (auto c : x.codes()) v[static_cast<std::size_t>(std::abs(c) - 1)] += c > 0 ? 1 : -1;
    return v;
  };
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : p.relators()) rows.push_back(sums(r));
  if (rows.empty()) rows.push_back(std::vector<Integer>(k, 0));
  auto before = smith_diagonal(rows);
  rows.push_back(sums(w));
  return smith_diagonal(rows) != before;
}

Family gdaha_source(const std::string& name) {
  if (name == "D4") return Family::C_alpha;
  if (name == "E6") return Family::G311;
  if (name == "E7") return Family::G411;
  if (name == "E8") return Family::G611;
  return parse_family(name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steinberg crystallographic reflection groups: presentations, braid theorems, Hecke relations"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "JSON report on stdout");
  app.add_option("--max-depth", opt.max_depth, "prover search depth");
  app.add_option("--max-len", opt.max_len, "prover word length bound");

  std::string family, what = "all", direction = "both", mode = "search", cert_dir, text, target, rhs, from, hecke_target;
  int n = 0, bound = 2, depth = 4, max_rank = 4;
  bool certs = false, dot = false, artin = false, hecke = false, q_one = false, flip = false;

  auto add_group = [&](CLI::App* c) {
    c->add_option("family", family, "family name (C_alpha, A_alpha, G311, ...)")->required();
    c->add_option("n", n, "rank")->required();
  };

  auto* verify = app.add_subcommand("verify", "check relators on the matrix representation");
  add_group(verify);
  verify->add_option("--what", what)->check(CLI::IsMember({"presentation", "x-relation", "extra-order", "all"}));

  auto* braid = app.add_subcommand("braid", "braid theorem isomorphism checks");
  add_group(braid);
  braid->add_option("--direction", direction)->check(CLI::IsMember({"fwd", "bwd", "both"}));
  braid->add_option("--mode", mode, "search, or replay (hint scripts only)")->check(CLI::IsMember({"search", "replay"}));
  braid->add_flag("--certificates", certs, "include certificates in the report");
  braid->add_option("--cert-dir", cert_dir, "write one certificate file per proved relator");
  braid->add_option("--max-rank", max_rank);

  auto* abel = app.add_subcommand("abelianize", "invariant factors of the commutator factor group");
  add_group(abel);

  auto* classes = app.add_subcommand("classes", "reflection conjugacy classes by bounded enumeration");
  add_group(classes);
  classes->add_option("--bound", bound, "translation coefficient bound");
  classes->add_option("--depth", depth, "conjugator word length");

  auto* hk = app.add_subcommand("hecke", "Hecke and GDAHA checks");
  hk->require_subcommand(1);
  auto* hk_pres = hk->add_subcommand("presentation", "generic Hecke algebra");
  add_group(hk_pres);
  auto* hk_gdaha = hk->add_subcommand("gdaha", "GDAHA presentation (D4, E6, E7, E8)");
  hk_gdaha->add_option("type", hecke_target)->required();
  hk_gdaha->add_option("n", n)->required();
  auto* hk_check = hk->add_subcommand("gdaha-check", "specialization of the generic Hecke algebra onto a GDAHA");
  hk_check->add_option("type", hecke_target, "D4, E6, E7, E8 or a source family")->required();
  hk_check->add_option("n", n)->required();
  auto* hk_rank1 = hk->add_subcommand("rank-one", "rank one D4 identification");
  hk_rank1->add_flag("--q-one", q_one);
  hk_rank1->add_flag("--flip", flip, "use s01 -> +q t11");
  auto* hk_triple = hk->add_subcommand("triple-dot", "third additional generator in type A");
  hk_triple->add_option("n", n)->required();
  auto* hk_degen = hk->add_subcommand("degeneration", "char polys annihilate the matrices at roots of unity");
  add_group(hk_degen);

  auto* prove = app.add_subcommand("prove", "prove a word trivial, or two words equal");
  prove->add_option("target", target, "family or braid space")->required();
  prove->add_option("n", n)->required();
  prove->add_option("word", text)->required();
  prove->add_option("rhs", rhs);
  prove->add_flag("--artin", artin, "work in the Artin group");
  prove->add_option("--from", from, "read the presentation from a file instead");
  prove->add_option("--cert-dir", cert_dir);

  auto* rep = app.add_subcommand("replay", "replay a certificate file");
  rep->add_option("file", from)->required();

  auto* exp = app.add_subcommand("export", "presentation text or DOT");
  exp->add_option("target", target, "family or braid space")->required();
  exp->add_option("n", n)->required();
  exp->add_flag("--dot", dot);
  exp->add_flag("--artin", artin);
  exp->add_flag("--hecke", hecke);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  RunReport r;
  for (int i = 1; i < argc; ++i) r.command += (i > 1 ? " " : "") + std::string(argv[i]);
  const auto t0 = std::chrono::steady_clock::now();
  const Budget budget = budget_from(opt);
  try {
    if (*verify) {
      cmd_verify(r, family, n, what);
    } else if (*braid) {
      cmd_braid(r, family, n, direction, mode == "replay", certs || !cert_dir.empty(), max_rank, budget);
    } else if (*abel) {
      r.output.push_back(join(abelianize(build_group_presentation(family_arg(family, n), n))));
    } else if (*classes) {
      cmd_classes(r, family, n, bound, depth);
    } else if (*hk_pres) {
      Family f = family_arg(family, n);
      if (!has_generic_hecke(f)) throw UsageError("no generic Hecke algebra for " + family);
      auto hp = build_generic_hecke(f, n);
      r.output.push_back(hp.to_text());
      r.output.push_back("parameter classes: " + std::to_string(hp.parameter_pairs));
    } else if (*hk_gdaha) {
      r.output.push_back(build_gdaha(gdaha_legs(hecke_target), n).to_text());
    } else if (*hk_check) {
      auto m = gdaha_match(gdaha_source(hecke_target), n);
      r.output.push_back(m.hecke.name + " -> " + m.gdaha.name);
      auto s = verify_specialization(m.hecke, m.specialization, m.gdaha, m.correspondence, budget);
      add_specialization(r, s, m.hecke, m.gdaha, budget);
    } else if (*hk_rank1) {
      for (const auto& c : rank_one_specialization_check(q_one, flip).checks)
        r.checks.push_back({"charpoly " + c.generator + " -> " + c.image, c.pass ? Status::Pass : Status::Fail, "laurent",
                            c.pass ? "" : "difference " + c.difference, {}});
    } else if (*hk_triple) {
      auto t = triple_dot_generator(n, budget);
      r.output.push_back("s" + std::to_string(n + 2) + " = " + t.generator_text);
      for (std::size_t i = 0; i < t.relations.size(); ++i) {
        auto c = from_verdict("", t.relations[i], nullptr, false, nullptr);
        if (!t.matrix_ok[i]) {
          c.status = Status::Fail;
          c.detail = "matrices disagree";
        }
        r.checks.push_back(c);
      }
    } else if (*hk_degen) {
      Family f = family_arg(family, n);
      if (!has_generic_hecke(f)) throw UsageError("no generic Hecke algebra for " + family);
      for (const auto& c : cyclotomic_degeneration(build_generic_hecke(f, n)))
        r.checks.push_back({"p(" + c.generator + ") = 0", c.pass ? Status::Pass : Status::Fail, "matrices", "", {}});
    } else if (*prove) {
      Presentation p;
      std::optional<Family> fam;
      if (!from.empty()) {
        p = Presentation::parse_text(read_file(from));
      } else {
        try {
          p = build_braid_presentation(parse_braid_space(target), n);
        } catch (const PresentationError&) {
          fam = family_arg(target, n);
          p = build_group_presentation(*fam, n);
        }
      }
      if (artin) p = artinize(p);
      RewriteSystem rs(p, budget);
      Word lhs = p.word(text), rw = rhs.empty() ? Word() : p.word(rhs);
      const std::string relation = text + " = " + (rhs.empty() ? "1" : rhs);
      Check c{relation, Status::Fail, "", "", std::nullopt};
      if (abelian_image_nontrivial(p, lhs * rw.inverse())) {
        c.method = "abelianization";
        c.detail = "exponent sums are not a combination of relators";
      } else if (fam && has_matrices(*fam) &&
                 evaluate_word(lhs, build_generator_matrices(*fam, n)) != evaluate_word(rw, build_generator_matrices(*fam, n))) {
        c.method = "matrices";
        c.detail = "the images in the reflection group differ";
      } else {
        auto v = check_equal(lhs, rw, ProverEngine{&rs, nullptr, true}, nullptr);
        if (v.relation.empty()) v.relation = relation;
        c = from_verdict("", v, &rs, true, &p);
      }
      r.checks.push_back(c);
      if (!cert_dir.empty()) write_certificates(r, cert_dir);
    } else if (*rep) {
      auto pc = parse_certificate(read_file(from));
      RewriteSystem rs(pc.presentation);
      auto rr = replay(pc.certificate, rs);
      r.checks.push_back({"replay " + pc.presentation.render(pc.certificate.input) + " (" +
                              std::to_string(pc.certificate.steps.size()) + " steps)",
                          rr.ok ? Status::Pass : Status::Fail, "replay", rr.message, {}});
    } else if (*exp) {
      if (hecke) {
        Family f = family_arg(target, n);
        if (!has_generic_hecke(f)) throw UsageError("no generic Hecke algebra for " + target);
        r.output.push_back(build_generic_hecke(f, n).to_text());
      } else {
        Presentation p;
        try {
          p = build_braid_presentation(parse_braid_space(target), n);
        } catch (const PresentationError&) {
          p = build_group_presentation(family_arg(target, n), n);
        }
        if (artin) p = artinize(p);
        r.output.push_back(dot ? diagram_to_dot(p.diagram) : p.to_text());
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const PresentationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const HeckeError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const WordParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (*braid) write_certificates(r, cert_dir);
  if (*braid && !certs)
    for (auto& c : r.checks) c.certificate.reset();
  r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.exit_code = r.status_code();
  print(r, opt.json);
  return r.exit_code;
}

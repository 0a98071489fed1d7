#include "strateq/cli.hpp"

#include <CLI11.hpp>

#include "strateq/io.hpp"
#include "strateq/nash.hpp"
#include "strateq/reduce.hpp"

namespace strateq::cli {

namespace {

int exit_code(const ReductionOutcome& outcome) {
  switch (outcome.result.index()) {
    case 0:
      return kExitEquivalent;
    case 1:
      return kExitNotEquivalent;
    case 2:
      return kExitDegenerate;
    default:
      return kExitRejected;
  }
}

Ser1Options options_for(const std::optional<Pivot>& pivot) {
  Ser1Options opts;
  if (pivot) {
    opts.pivot_row = pivot->row;
    opts.pivot_col = pivot->col;
  }
  return opts;
}

std::optional<ReductionOutcome> load_and_reduce(const std::string& input, const std::optional<Pivot>& pivot,
                                                std::ostream& err) {
  try {
    BimatrixGame g = parse_game(read_file(input));
    return ser1_reduce(g, options_for(pivot));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return std::nullopt;
  }
}

}  // namespace

Pivot parse_pivot(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("pivot must be 'l,k'");
  auto index = [](const std::string& s) -> std::size_t {
    Integer v;
    if (v.set_str(s, 10) != 0 || v < 1 || !v.fits_ulong_p()) throw ParseError("bad pivot index '" + s + "'");
    return v.get_ui() - 1;
  };
  return {index(text.substr(0, comma)), index(text.substr(comma + 1))};
}

int cmd_reduce(const std::string& input, const std::optional<std::string>& output, const std::optional<Pivot>& pivot,
               std::ostream& out, std::ostream& err) {
  auto outcome = load_and_reduce(input, pivot, err);
  if (!outcome) return kExitError;
  std::string doc = emit_certificate(make_document(*outcome));
  if (output) {
    try {
      write_file(*output, doc);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kExitError;
    }
  } else {
    out << doc;
  }
  return exit_code(*outcome);
}

int cmd_check(const std::string& input, const std::optional<Pivot>& pivot, std::ostream& out, std::ostream& err) {
  auto outcome = load_and_reduce(input, pivot, err);
  if (!outcome) return kExitError;
  auto doc = make_document(*outcome);
  out << to_string(doc.status);
  if (doc.status == CertificateStatus::equivalent) out << " gamma=" << to_string(*doc.gamma);
  if (!doc.reason.empty()) out << " reason=" << doc.reason;
  out << '\n';
  return exit_code(*outcome);
}

int cmd_generate(std::size_t m, std::size_t n, std::uint64_t seed, int entry_bound, const std::string& output,
                 std::ostream& out, std::ostream& err) {
  if (m < 2 || n < 2 || entry_bound < 1) {
    err << "rejected: need m, n >= 2 and entry bound >= 1\n";
    return kExitRejected;
  }
  auto fixture = generate_disguised_rank1(m, n, seed, entry_bound);
  try {
    write_file(output, emit_game(fixture.game));
    write_file(output + ".hidden", emit_hidden({fixture.base, fixture.pat}));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  out << "wrote " << output << " and " << output << ".hidden\n";
  return kExitEquivalent;
}

int cmd_verify(const std::string& game_path, const std::string& certificate_path, bool nash, std::ostream& out,
               std::ostream& err) {
  BimatrixGame g;
  CertificateDocument doc;
  try {
    g = parse_game(read_file(game_path));
    doc = parse_certificate(read_file(certificate_path));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  if (doc.status != CertificateStatus::equivalent) {
    out << "fail: certificate status is " << to_string(doc.status) << '\n';
    return kExitNotEquivalent;
  }
  if (nash && (g.m() > kDefaultNashBound || g.n() > kDefaultNashBound)) {
    err << "rejected: --nash is limited to " << kDefaultNashBound << "x" << kDefaultNashBound << " games\n";
    return kExitRejected;
  }
  auto report = verify_certificate(g, *doc.certificate);
  if (!report) {
    for (const auto& r : report.reasons) out << "fail: " << r << '\n';
    return kExitNotEquivalent;
  }
  if (nash) {
    auto check = cross_verify_equivalence(lift(g), doc.certificate->rank1_game());
    if (check.degenerate) out << "note: degenerate support systems were skipped\n";
    if (!check) {
      out << "fail: equilibrium sets differ\n";
      return kExitNotEquivalent;
    }
  }
  out << "ok\n";
  return kExitEquivalent;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Detect bimatrix games that are affinely equivalent to rank-1 games"};
  app.require_subcommand(1);

  std::string input, output, game_path, cert_path, pivot_text;
  std::size_t m = 0, n = 0;
  std::uint64_t seed = 1;
  int entry_bound = 5;
  bool nash = false;

  auto* reduce = app.add_subcommand("reduce", "Reduce a game and write its certificate");
  reduce->add_option("input", input, "Game file")->required();
  reduce->add_option("-o,--output", output, "Certificate path (default: stdout)");
  reduce->add_option("--pivot", pivot_text, "Row and column l,k for the general case (1-based)");

  auto* check = app.add_subcommand("check", "Print only the status and gamma");
  check->add_option("input", input, "Game file")->required();
  check->add_option("--pivot", pivot_text, "Row and column l,k for the general case (1-based)");

  auto* generate = app.add_subcommand("generate", "Write a disguised rank-1 game");
  generate->add_option("m", m, "Rows")->required();
  generate->add_option("n", n, "Columns")->required();
  generate->add_option("--seed", seed, "Random seed");
  generate->add_option("--entry-bound", entry_bound, "Entries are drawn from [-bound, bound]");
  generate->add_option("-o,--output", output, "Game file path")->required();

  auto* verify = app.add_subcommand("verify", "Re-check a certificate against its game");
  verify->add_option("game", game_path, "Game file")->required();
  verify->add_option("certificate", cert_path, "Certificate file")->required();
  verify->add_flag("--nash", nash, "Also compare equilibrium sets (games up to 4x4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  std::optional<Pivot> pivot;
  if (!pivot_text.empty()) {
    try {
      pivot = parse_pivot(pivot_text);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kExitError;
    }
  }
  std::optional<std::string> out_path;
  if (!output.empty()) out_path = output;

  if (reduce->parsed()) return cmd_reduce(input, out_path, pivot, out, err);
  if (check->parsed()) return cmd_check(input, pivot, out, err);
  if (generate->parsed()) return cmd_generate(m, n, seed, entry_bound, output, out, err);
  return cmd_verify(game_path, cert_path, nash, out, err);
}

}  // namespace strateq::cli

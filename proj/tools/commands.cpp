#include "commands.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "clans/clan.hpp"
#include "clans/json_io.hpp"
#include "clans/parallel.hpp"
#include "clans/patterns.hpp"
#include "clans/poset.hpp"
#include "clans/springer.hpp"
#include "clans/verify.hpp"

namespace clans::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::optional<int> p;
  std::optional<int> q;
  int max_n = 6;
  std::string format;
  std::string out_path;
  unsigned jobs = 0;
  std::string clan_text;
  bool springer = false;
};

std::pair<int, int> require_signature(const RunConfig& cfg) {
  if (!cfg.p || !cfg.q) throw UsageError("--p and --q are required");
  if (*cfg.p < 0 || *cfg.q < 0) throw UsageError("--p and --q must be nonnegative");
  return {*cfg.p, *cfg.q};
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError("format '" + format + "' is not supported by this command");
}

struct Row {
  std::string clan;
  int dimension;
  bool closed;
  bool smooth;
};

std::vector<Row> classify_all(int p, int q, unsigned jobs) {
  const auto all = enumerate_clans(p, q);
  std::vector<Row> rows(all.size());
  parallel_for(all.size(), jobs, [&](std::size_t i) {
    rows[i] = {format_clan(all[i]), dimension(all[i]), is_closed(all[i]), is_smooth(classify(all[i]))};
  });
  return rows;
}

void cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const auto [p, q] = require_signature(cfg);
  const std::string format = cfg.format.empty() ? "tsv" : cfg.format;
  require_format(format, {"tsv", "json"});
  const auto rows = classify_all(p, q, cfg.jobs);
  if (format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const Row& r : rows) {
      doc.push_back({{"clan", r.clan}, {"dimension", r.dimension}, {"closed", r.closed},
                     {"rationally_smooth", r.smooth}});
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << "clan\tdim\tclosed\trationally_smooth\n";
  for (const Row& r : rows) {
    out << r.clan << '\t' << r.dimension << '\t' << (r.closed ? "yes" : "no") << '\t'
        << (r.smooth ? "yes" : "no") << '\n';
  }
}

void cmd_classify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.clan_text.empty()) throw UsageError("--clan is required");
  if (cfg.p.has_value() != cfg.q.has_value()) throw UsageError("give both --p and --q or neither");
  if (!cfg.format.empty()) require_format(cfg.format, {"json"});
  const Clan clan = cfg.p ? parse_clan(cfg.clan_text, *cfg.p, *cfg.q) : parse_clan(cfg.clan_text);
  if (cfg.springer && clan.p() + clan.q() > kDefaultMaxN)
    throw UsageError("--springer needs p + q <= " + std::to_string(kDefaultMaxN));
  const SmoothnessVerdict verdict = classify(clan);
  nlohmann::json doc = verdict_to_json(clan, verdict);
  if (cfg.springer) {
    const OrbitPoset poset = OrbitPoset::build(clan.p(), clan.q(), {kDefaultMaxN, cfg.jobs});
    const auto witness = springer_diagnosis(poset, clan);
    doc["springer_witness"] = witness ? witness_to_json(*witness) : nlohmann::json(nullptr);
  }
  out << doc.dump(2) << '\n';
}

void cmd_poset(const RunConfig& cfg, std::ostream& out) {
  const auto [p, q] = require_signature(cfg);
  const std::string format = cfg.format.empty() ? "dot" : cfg.format;
  require_format(format, {"dot", "tsv"});
  if (p + q > kDefaultMaxN)
    throw UsageError("p + q = " + std::to_string(p + q) + " exceeds the bound " + std::to_string(kDefaultMaxN));
  const OrbitPoset poset = OrbitPoset::build(p, q, {kDefaultMaxN, cfg.jobs});
  if (format == "dot")
    export_dot(poset, out);
  else
    export_tsv(poset, out);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.max_n < 0 || cfg.max_n > kMaxVerifyN)
    throw UsageError("--max-n must lie in [0, " + std::to_string(kMaxVerifyN) + "]");
  if (!cfg.format.empty()) require_format(cfg.format, {"tsv"});
  const VerifyReport report = run_verification(cfg.max_n, cfg.jobs);
  print_report(report, out);
  return report.passed() ? kExitOk : kExitCheckFailed;
}

void cmd_stats(const RunConfig& cfg, std::ostream& out) {
  const auto [p, q] = require_signature(cfg);
  const std::string format = cfg.format.empty() ? "tsv" : cfg.format;
  require_format(format, {"tsv", "json"});
  const auto rows = classify_all(p, q, cfg.jobs);
  std::size_t closed = 0;
  std::size_t smooth = 0;
  std::map<int, std::size_t> histogram;
  for (const Row& r : rows) {
    closed += r.closed;
    smooth += r.smooth;
    ++histogram[r.dimension];
  }
  const std::size_t singular = rows.size() - smooth;
  if (format == "json") {
    nlohmann::json hist = nlohmann::json::array();
    for (const auto& [dim, count] : histogram) hist.push_back({{"dimension", dim}, {"count", count}});
    nlohmann::json doc = {{"p", p},           {"q", q},           {"total", rows.size()},
                          {"closed", closed}, {"smooth", smooth}, {"singular", singular},
                          {"dimension_histogram", hist}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << "total\t" << rows.size() << "\nclosed\t" << closed << "\nsmooth\t" << smooth
      << "\nsingular\t" << singular << '\n';
  for (const auto& [dim, count] : histogram) out << "dim " << dim << '\t' << count << '\n';
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"K-orbit clan enumeration, closure order and smoothness classification", "clantool"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_signature = [&cfg](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "number of +1 eigenvalues");
    sub->add_option("--q", cfg.q, "number of -1 eigenvalues");
  };
  const auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"tsv", "json", "dot"}));
    sub->add_option("--out", cfg.out_path, "write output to PATH instead of stdout");
    sub->add_option("--jobs", cfg.jobs, "worker threads, 0 = all cores");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list every clan with dimension and verdict");
  add_signature(enumerate);
  add_common(enumerate);
  auto* classify_cmd = app.add_subcommand("classify", "classify one clan");
  add_signature(classify_cmd);
  add_common(classify_cmd);
  classify_cmd->add_option("--clan", cfg.clan_text, "clan text, e.g. 1,+,-,1");
  classify_cmd->add_flag("--springer", cfg.springer, "also run the reflection-count diagnosis");
  auto* poset_cmd = app.add_subcommand("poset", "dump the closure order");
  add_signature(poset_cmd);
  add_common(poset_cmd);
  auto* verify = app.add_subcommand("verify", "exhaustive self-checks");
  verify->add_option("--max-n", cfg.max_n, "largest p + q to check (default 6)");
  add_common(verify);
  auto* stats = app.add_subcommand("stats", "orbit counts and dimension histogram");
  add_signature(stats);
  add_common(stats);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  std::ostringstream buffer;
  try {
    int code = kExitOk;
    if (enumerate->parsed())
      cmd_enumerate(cfg, buffer);
    else if (classify_cmd->parsed())
      cmd_classify(cfg, buffer);
    else if (poset_cmd->parsed())
      cmd_poset(cfg, buffer);
    else if (verify->parsed())
      code = cmd_verify(cfg, buffer);
    else
      cmd_stats(cfg, buffer);

    if (cfg.out_path.empty()) {
      out << buffer.str();
    } else {
      file.open(cfg.out_path, std::ios::binary);
      file << buffer.str();
      if (!file) {
        err << "error: cannot write " << cfg.out_path << '\n';
        return kExitUsage;
      }
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ClanError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace clans::cli

#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gogmagog/bijection.hpp"
#include "gogmagog/columns.hpp"
#include "gogmagog/enumeration.hpp"
#include "gogmagog/harness.hpp"
#include "gogmagog/io.hpp"
#include "gogmagog/statistics.hpp"
#include "gogmagog/validation.hpp"

namespace gg = gogmagog;

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

gg::Kind need_kind(const std::string& name) {
  if (const auto k = gg::kind_from_string(name)) return *k;
  throw std::invalid_argument("unknown kind '" + name + "' (expected magog or gog)");
}

gg::Format need_format(const std::string& name) {
  if (const auto f = gg::format_from_string(name)) return *f;
  throw std::invalid_argument("unknown format '" + name + "' (expected text or json)");
}

int parse_int(std::string_view token, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw std::invalid_argument(std::string("cannot read ") + what + " from '" +
                                std::string(token) + "'");
  }
  return value;
}

gg::EnumerationPartition need_partition(const std::string& text) {
  const size_t slash = text.find('/');
  if (slash != std::string::npos) {
    gg::EnumerationPartition part{
        parse_int(std::string_view(text).substr(0, slash), "the shard index"),
        parse_int(std::string_view(text).substr(slash + 1), "the shard count")};
    if (part.valid()) return part;
  }
  throw std::invalid_argument("--partition wants i/p with 0 <= i < p, e.g. 2/8");
}

gg::big_int need_bigint(const std::string& text) {
  try {
    return gg::big_int(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot read an integer from '" + text + "'");
  }
}

void emit_instance(const gg::AnyTrapezoid& t, gg::Format fmt) {
  std::cout << gg::serialize(t, fmt);
  if (fmt == gg::Format::json) std::cout << '\n';
}

nlohmann::json stat_json(const gg::StatVector& sv) {
  return {{"names", sv.names}, {"values", sv.values}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Magog/Gog trapezoid toolkit: validation, the block-moving bijection, "
               "enumeration, exact counting, rank/unrank, statistics and verification"};
  app.require_subcommand(1);
  std::function<int()> run;

  std::string val_file = "-";
  auto* cmd_validate = app.add_subcommand(
      "validate", "Check an instance and list every violated rule");
  cmd_validate->add_option("file", val_file, "instance file, '-' for stdin")
      ->capture_default_str();
  cmd_validate->callback([&] {
    run = [&] {
      const gg::AnyTrapezoid t = gg::parse_any(read_input(val_file));
      const gg::ValidationReport rep = gg::validate(t);
      if (rep.ok()) {
        std::cout << "valid\n";
        return 0;
      }
      for (const gg::Violation& v : rep.violations) {
        std::cout << gg::to_string(v.rule) << " at (" << v.row << "," << v.col
                  << "): " << v.message << "\n";
      }
      return 1;
    };
  });

  std::string map_file = "-";
  std::string map_dir = "auto";
  std::string map_fmt = "text";
  auto* cmd_map = app.add_subcommand(
      "map", "Apply the bijection; the case tag goes to stderr");
  cmd_map->add_option("file", map_file, "instance file, '-' for stdin")
      ->capture_default_str();
  cmd_map->add_option("--direction", map_dir, "magog-to-gog, gog-to-magog or auto")
      ->check(CLI::IsMember({"auto", "magog-to-gog", "gog-to-magog"}))
      ->capture_default_str();
  cmd_map->add_option("--format", map_fmt, "text or json")->capture_default_str();
  cmd_map->callback([&] {
    run = [&] {
      const gg::AnyTrapezoid t = gg::parse_any(read_input(map_file));
      const gg::Kind kind = gg::kind_of(t);
      if (map_dir == "magog-to-gog" && kind != gg::Kind::magog) {
        throw std::invalid_argument("direction magog-to-gog needs a magog input");
      }
      if (map_dir == "gog-to-magog" && kind != gg::Kind::gog) {
        throw std::invalid_argument("direction gog-to-magog needs a gog input");
      }
      const gg::CaseTag tag =
          std::visit([](const auto& v) { return gg::classify(v); }, t);
      const gg::AnyTrapezoid image = gg::map_any(t);
      std::cerr << gg::to_string(tag) << "\n";
      emit_instance(image, need_format(map_fmt));
      return 0;
    };
  });

  std::string en_kind;
  int en_n = 0;
  int en_ell = 0;
  std::string en_fmt = "text";
  long long en_limit = -1;
  std::string en_part = "0/1";
  auto* cmd_enumerate = app.add_subcommand(
      "enumerate", "Stream every instance in canonical order");
  cmd_enumerate->add_option("--kind", en_kind, "magog or gog")->required();
  cmd_enumerate->add_option("--n", en_n, "number of columns")->required();
  cmd_enumerate->add_option("--ell", en_ell, "ceiling offset")->capture_default_str();
  cmd_enumerate->add_option("--format", en_fmt, "text blocks or json lines")
      ->capture_default_str();
  cmd_enumerate->add_option("--limit", en_limit, "stop after this many, -1 for all")
      ->capture_default_str();
  cmd_enumerate->add_option("--partition", en_part, "shard i/p of a partitioned run")
      ->capture_default_str();
  cmd_enumerate->callback([&] {
    run = [&] {
      const gg::Format fmt = need_format(en_fmt);
      long long remaining = en_limit < 0 ? -1 : en_limit;
      gg::for_each(
          need_kind(en_kind), gg::TrapezoidParams{en_n, en_ell},
          [&](const gg::AnyTrapezoid& t) {
            if (remaining == 0) return false;
            emit_instance(t, fmt);
            if (remaining > 0) --remaining;
            return true;
          },
          need_partition(en_part));
      return 0;
    };
  });

  std::string cnt_kind;
  int cnt_n = 0;
  int cnt_ell = 0;
  auto* cmd_count = app.add_subcommand("count", "Print the exact family size");
  cmd_count->add_option("--kind", cnt_kind, "magog or gog")->required();
  cmd_count->add_option("--n", cnt_n, "number of columns")->required();
  cmd_count->add_option("--ell", cnt_ell, "ceiling offset")->capture_default_str();
  cmd_count->callback([&] {
    run = [&] {
      std::cout << gg::count(need_kind(cnt_kind), gg::TrapezoidParams{cnt_n, cnt_ell}).str()
                << "\n";
      return 0;
    };
  });

  std::string rk_file = "-";
  auto* cmd_rank = app.add_subcommand(
      "rank", "Print the zero-based position in canonical order");
  cmd_rank->add_option("file", rk_file, "instance file, '-' for stdin")
      ->capture_default_str();
  cmd_rank->callback([&] {
    run = [&] {
      std::cout << gg::rank(gg::parse_any(read_input(rk_file))).str() << "\n";
      return 0;
    };
  });

  std::string ur_kind;
  int ur_n = 0;
  int ur_ell = 0;
  std::string ur_rank;
  std::string ur_fmt = "text";
  auto* cmd_unrank = app.add_subcommand(
      "unrank", "Print the instance at a given canonical position");
  cmd_unrank->add_option("--kind", ur_kind, "magog or gog")->required();
  cmd_unrank->add_option("--n", ur_n, "number of columns")->required();
  cmd_unrank->add_option("--ell", ur_ell, "ceiling offset")->capture_default_str();
  cmd_unrank->add_option("--rank", ur_rank, "zero-based position, decimal")->required();
  cmd_unrank->add_option("--format", ur_fmt, "text or json")->capture_default_str();
  cmd_unrank->callback([&] {
    run = [&] {
      const gg::AnyTrapezoid t = gg::unrank(
          need_kind(ur_kind), gg::TrapezoidParams{ur_n, ur_ell}, need_bigint(ur_rank));
      emit_instance(t, need_format(ur_fmt));
      return 0;
    };
  });

  std::string st_file = "-";
  std::string st_kind;
  int st_n = 0;
  int st_ell = 0;
  std::string st_selector = "mrr";
  std::string st_fmt = "text";
  bool st_distribution = false;
  std::string st_counterexample;
  auto* cmd_stats = app.add_subcommand(
      "stats", "Evaluate statistics on an instance, tabulate them over a family, "
               "or search for a pairing the bijection fails to preserve");
  cmd_stats->add_option("file", st_file, "instance file for the single-instance mode")
      ->capture_default_str();
  cmd_stats->add_option("--kind", st_kind, "family kind (distribution mode)");
  cmd_stats->add_option("--n", st_n, "number of columns (family modes)");
  cmd_stats->add_option("--ell", st_ell, "ceiling offset (family modes)")
      ->capture_default_str();
  cmd_stats->add_option("--selector", st_selector, "statistic selector or component name")
      ->capture_default_str();
  cmd_stats->add_option("--format", st_fmt, "text/csv or json")->capture_default_str();
  cmd_stats->add_flag("--distribution", st_distribution,
                      "tabulate the selector over the whole family");
  cmd_stats->add_option("--counterexample", st_counterexample,
                        "search the family for a pairing mismatch (mrr, bc or zero)");
  cmd_stats->callback([&] {
    run = [&] {
      const gg::Format fmt = need_format(st_fmt);
      if (!st_counterexample.empty()) {
        const auto pairing = gg::pairing_from_string(st_counterexample);
        if (!pairing) {
          throw std::invalid_argument("unknown pairing '" + st_counterexample + "'");
        }
        const auto witness = gg::find_statistic_counterexample(
            gg::TrapezoidParams{st_n, st_ell}, *pairing);
        if (!witness) {
          std::cout << "preserved\n";
          return 0;
        }
        if (fmt == gg::Format::json) {
          nlohmann::json j;
          j["magog"] = nlohmann::json::parse(
              gg::serialize_json(gg::AnyTrapezoid(witness->magog)));
          j["gog"] = nlohmann::json::parse(
              gg::serialize_json(gg::AnyTrapezoid(witness->gog)));
          j["magog_stat"] = stat_json(witness->magog_stat);
          j["gog_stat"] = stat_json(witness->gog_stat);
          std::cout << j.dump() << "\n";
        } else {
          std::cout << gg::serialize_text(gg::AnyTrapezoid(witness->magog))
                    << gg::serialize_text(gg::AnyTrapezoid(witness->gog))
                    << "magog_stat: " << gg::to_string(witness->magog_stat) << "\n"
                    << "gog_stat: " << gg::to_string(witness->gog_stat) << "\n";
        }
        return 0;
      }
      if (st_distribution) {
        if (st_kind.empty()) {
          throw std::invalid_argument("--distribution needs --kind");
        }
        const gg::Kind kind = need_kind(st_kind);
        const auto sel = gg::selector_from_string(st_selector, kind);
        if (!sel) throw std::invalid_argument("unknown selector '" + st_selector + "'");
        const gg::Distribution table =
            gg::distribution(kind, gg::TrapezoidParams{st_n, st_ell}, *sel);
        std::vector<std::string> names;
        for (const gg::StatComponent c : *sel) names.emplace_back(gg::to_string(c));
        if (fmt == gg::Format::json) {
          nlohmann::json rows = nlohmann::json::array();
          for (const auto& [sv, cnt] : table) {
            rows.push_back({{"values", sv.values}, {"count", cnt.str()}});
          }
          std::cout << nlohmann::json{{"names", names}, {"rows", rows}}.dump() << "\n";
        } else {
          for (size_t i = 0; i < names.size(); ++i) std::cout << names[i] << ",";
          std::cout << "count\n";
          for (const auto& [sv, cnt] : table) {
            for (const long long v : sv.values) std::cout << v << ",";
            std::cout << cnt.str() << "\n";
          }
        }
        return 0;
      }
      const gg::AnyTrapezoid t = gg::parse_any(read_input(st_file));
      const auto sel = gg::selector_from_string(st_selector, gg::kind_of(t));
      if (!sel) throw std::invalid_argument("unknown selector '" + st_selector + "'");
      const gg::StatVector sv = gg::eval_stats(t, *sel);
      if (fmt == gg::Format::json) {
        std::cout << stat_json(sv).dump() << "\n";
      } else {
        std::cout << gg::to_string(sv) << "\n";
      }
      return 0;
    };
  });

  int vf_n = 0;
  int vf_ell = 0;
  std::string vf_check = "all";
  long long vf_cap = 10'000'000;
  int vf_keep = 100;
  auto* cmd_verify = app.add_subcommand(
      "verify", "Run the structural checks; one json report per line on stdout");
  cmd_verify->add_option("--n", vf_n, "number of columns")->required();
  cmd_verify->add_option("--ell", vf_ell, "ceiling offset")->capture_default_str();
  cmd_verify->add_option("--check", vf_check, "all, roundtrip, cases or counts")
      ->check(CLI::IsMember({"all", "roundtrip", "cases", "counts"}))
      ->capture_default_str();
  cmd_verify->add_option("--cap", vf_cap, "skip enumeration-backed checks above this size")
      ->capture_default_str();
  cmd_verify->add_option("--max-failures", vf_keep, "failures kept per report")
      ->capture_default_str();
  cmd_verify->callback([&] {
    run = [&] {
      const gg::TrapezoidParams params{vf_n, vf_ell};
      gg::VerifyOptions opts;
      opts.enumeration_cap = vf_cap;
      opts.max_failures_kept = vf_keep;
      std::vector<gg::VerifyReport> reports;
      if (vf_check == "all" || vf_check == "roundtrip") {
        reports.push_back(gg::verify_roundtrip(params, opts));
      }
      if (vf_check == "all" || vf_check == "cases") {
        reports.push_back(gg::verify_case_correspondence(params, opts));
      }
      if (vf_check == "all" || vf_check == "counts") {
        reports.push_back(gg::verify_equinumerosity(params, opts));
      }
      bool ok = true;
      for (const gg::VerifyReport& rep : reports) {
        std::cout << gg::to_json_string(rep) << "\n";
        std::cerr << rep.check << " n=" << params.n << " ell=" << params.ell << ": "
                  << (rep.passed() ? "pass" : "FAIL")
                  << (rep.skipped ? " (enumeration skipped)" : "") << "\n";
        ok = ok && rep.passed();
      }
      return ok ? 0 : 1;
    };
  });

  std::string rd_file = "-";
  bool rd_bug = false;
  bool rd_pivot = false;
  bool rd_bounds = false;
  auto* cmd_render = app.add_subcommand(
      "render", "Draw an instance in the staggered two-row layout");
  cmd_render->add_option("file", rd_file, "instance file, '-' for stdin")
      ->capture_default_str();
  cmd_render->add_flag("--mark-bug", rd_bug, "mark the smallest bug (magog input)");
  cmd_render->add_flag("--mark-pivot", rd_pivot, "mark the pivot column (gog input)");
  cmd_render->add_flag("--bounds", rd_bounds, "append the per-cell ceilings");
  cmd_render->callback([&] {
    run = [&] {
      const gg::AnyTrapezoid t = gg::parse_any(read_input(rd_file));
      std::cout << gg::render_ascii(t, gg::RenderSpec{rd_bug, rd_pivot, rd_bounds});
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return run ? run() : 2;
  } catch (const gg::validation_error& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return 1;
  } catch (const gg::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

#include "pathmorph/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathmorph/bijections.hpp"
#include "pathmorph/path.hpp"
#include "pathmorph/path_sets.hpp"
#include "pathmorph/render.hpp"
#include "pathmorph/verify.hpp"

namespace pathmorph::cli {

namespace {

using nlohmann::json;

json path_to_json(const Path& p) { return json(p.positions()); }

Path path_from_json_line(const std::string& line) {
  json parsed = json::parse(line);
  if (!parsed.is_array()) raise(Errc::SyntaxError, "expected a JSON array of integers");
  std::vector<int> raw;
  raw.reserve(parsed.size());
  for (const auto& v : parsed) {
    if (!v.is_number_integer()) raise(Errc::SyntaxError, "expected a JSON array of integers");
    raw.push_back(v.get<int>());
  }
  return validate(std::move(raw));
}

json markers_for(BijectionId id, const Path& input) {
  json m;
  switch (id) {
    case BijectionId::Phi1: {
      const ValleyDecomposition vd = decompose_valleys(input);
      m = {{"M", vd.max_height}, {"a", vd.a}, {"b", vd.b}};
      break;
    }
    case BijectionId::Psi1: {
      const AscentDecomposition ad = decompose_ascents(input);
      m = {{"h", ad.half_terminal}, {"c", ad.c}, {"d", ad.d}};
      break;
    }
    case BijectionId::Phi1Full: {
      const int sign = input.at(1) > 0 ? 1 : -1;
      const ValleyDecomposition vd =
          decompose_valleys(sign > 0 ? input : input.negated());
      m = {{"sign", sign}, {"M", vd.max_height}, {"a", vd.a}, {"b", vd.b}};
      break;
    }
    case BijectionId::Psi1Full: {
      const int sign = input.at(1) > 0 ? 1 : -1;
      const AscentDecomposition ad = decompose_ascents(sign > 0 ? input : input.negated());
      m = {{"sign", sign}, {"h", ad.half_terminal}, {"c", ad.c}, {"d", ad.d}};
      break;
    }
    case BijectionId::Phi2:
      m = {{"tau", detail::tau_unchecked(input)}};
      break;
    case BijectionId::Psi2:
      m = {{"nu", detail::nu_unchecked(input)}};
      break;
  }
  return m;
}

json report_to_json(const VerifyReport& r) {
  json cexes = json::array();
  for (const auto& c : r.counterexamples) {
    cexes.push_back({{"input", c.input ? path_to_json(*c.input) : json(nullptr)},
                     {"detail", c.detail}});
  }
  return {{"check", r.check_name},
          {"n", r.n},
          {"domain_size", r.domain_size.str()},
          {"image_size", r.image_size.str()},
          {"passed", r.passed},
          {"counterexamples", cexes}};
}

void print_report_text(const VerifyReport& r, std::ostream& out) {
  out << (r.passed ? "[PASS] " : "[FAIL] ") << r.check_name << " n=" << r.n
      << " domain=" << r.domain_size.str() << " image=" << r.image_size.str() << "\n";
  for (const auto& c : r.counterexamples) {
    out << "  counterexample";
    if (c.input) out << " " << serialize(*c.input);
    out << ": " << c.detail << "\n";
  }
}

struct CellSize {
  int width = 240;
  int height = 240;
};

CellSize parse_cell(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) raise(Errc::SyntaxError, "--cell expects WxH, got \"" + text + "\"");
  CellSize c;
  try {
    c.width = std::stoi(text.substr(0, x));
    c.height = std::stoi(text.substr(x + 1));
  } catch (const std::exception&) {
    raise(Errc::SyntaxError, "--cell expects WxH, got \"" + text + "\"");
  }
  if (c.width < 1 || c.height < 1) raise(Errc::SyntaxError, "--cell dimensions must be positive");
  return c;
}

void write_path(const Path& p, OutputFormat fmt, std::ostream& out) {
  if (fmt == OutputFormat::Jsonl || fmt == OutputFormat::Json) {
    out << path_to_json(p).dump() << "\n";
  } else {
    out << serialize(p) << "\n";
  }
}

const std::map<std::string, OutputFormat>& format_names() {
  static const std::map<std::string, OutputFormat> names{
      {"tuple", OutputFormat::Tuple}, {"jsonl", OutputFormat::Jsonl}, {"json", OutputFormat::Json}};
  return names;
}

int parse_config_int(const std::string& value, const std::string& key, int minimum) {
  int v = 0;
  try {
    std::size_t used = 0;
    v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
  } catch (const std::exception&) {
    raise(Errc::SyntaxError, key + " expects an integer, got \"" + value + "\"");
  }
  if (v < minimum) {
    raise(Errc::InvalidArgument, key + " must be >= " + std::to_string(minimum));
  }
  return v;
}

OutputFormat parse_config_format(const std::string& value, const std::string& key) {
  const auto it = format_names().find(value);
  if (it == format_names().end()) {
    raise(Errc::SyntaxError, key + " expects tuple, jsonl or json, got \"" + value + "\"");
  }
  return it->second;
}

void apply_config_entry(Config& config, const std::string& raw_key, const std::string& value) {
  std::string key = raw_key;
  std::replace(key.begin(), key.end(), '_', '-');
  if (key == "exhaustive-limit") {
    config.exhaustive_limit = parse_config_int(value, key, 1);
  } else if (key == "output-format") {
    config.output_format = parse_config_format(value, key);
  } else if (key == "counterexample-cap") {
    config.counterexample_cap = parse_config_int(value, key, 0);
  } else {
    raise(Errc::SyntaxError, "unknown config key \"" + raw_key + "\"");
  }
}

void load_config_file(Config& config, const std::string& path) {
  std::ifstream file(path);
  if (!file) raise(Errc::InvalidArgument, "cannot read config file \"" + path + "\"");
  std::string line;
  while (std::getline(file, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    std::string trimmed = line.substr(first, last - first + 1);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      raise(Errc::SyntaxError, "config line is not key=value: \"" + trimmed + "\"");
    }
    auto strip = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      if (b == std::string::npos) return std::string();
      const auto e = s.find_last_not_of(" \t");
      return s.substr(b, e - b + 1);
    };
    apply_config_entry(config, strip(trimmed.substr(0, eq)), strip(trimmed.substr(eq + 1)));
  }
}

void load_env(Config& config) {
  if (const char* v = std::getenv("PATHMORPH_EXHAUSTIVE_LIMIT")) {
    config.exhaustive_limit = parse_config_int(v, "PATHMORPH_EXHAUSTIVE_LIMIT", 1);
  }
  if (const char* v = std::getenv("PATHMORPH_OUTPUT_FORMAT")) {
    config.output_format = parse_config_format(v, "PATHMORPH_OUTPUT_FORMAT");
  }
  if (const char* v = std::getenv("PATHMORPH_COUNTEREXAMPLE_CAP")) {
    config.counterexample_cap = parse_config_int(v, "PATHMORPH_COUNTEREXAMPLE_CAP", 0);
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"lattice-path bijections: enumerate, map, verify, render"};
  app.name("pathmorph");
  app.require_subcommand(1);

  // Config precedence is handled by hand after parsing:
  // defaults < --config file < PATHMORPH_* environment < flags.
  std::string config_path;
  int flag_limit = 0;
  std::string flag_format;
  int flag_cap = 0;
  app.add_option("--config", config_path, "key=value configuration file");
  CLI::Option* limit_opt = app.add_option("--exhaustive-limit", flag_limit,
                                          "largest n swept exhaustively (default 12)")
                               ->check(CLI::PositiveNumber);
  CLI::Option* format_opt =
      app.add_option("--output-format", flag_format, "default output format: tuple|jsonl|json");
  CLI::Option* cap_opt = app.add_option("--counterexample-cap", flag_cap,
                                        "max counterexamples kept per report (default 10)")
                             ->check(CLI::NonNegativeNumber);

  int n = 0;
  std::string set_arg;
  std::string bijection_arg;
  std::string path_arg;
  std::string check_arg = "all";
  std::string method_arg = "formula";
  std::string out_file;
  std::string cell_arg;
  std::string format_arg;
  std::uint64_t seed = 0;
  int draw_count = 1;
  int columns = 0;
  int workers = 1;
  bool limit_override = false;

  CLI::App* cmd_enumerate = app.add_subcommand("enumerate", "list every member of a family");
  cmd_enumerate->fallthrough();
  cmd_enumerate->add_option("--n", n, "half-length")->required()->check(CLI::PositiveNumber);
  cmd_enumerate->add_option("--set", set_arg, "family: S A B Aprime Bprime T C D")->required();
  cmd_enumerate->add_option("--format", format_arg, "tuple|jsonl");
  cmd_enumerate->add_flag("--limit-override", limit_override, "allow n above the exhaustive limit");

  CLI::App* cmd_count = app.add_subcommand("count", "cardinality of a family");
  cmd_count->fallthrough();
  cmd_count->add_option("--n", n, "half-length")->required()->check(CLI::PositiveNumber);
  cmd_count->add_option("--set", set_arg, "family: S A B Aprime Bprime T C D")->required();
  cmd_count->add_option("--method", method_arg, "formula|enumerate")
      ->check(CLI::IsMember({"formula", "enumerate"}));
  cmd_count->add_flag("--limit-override", limit_override, "allow n above the exhaustive limit");

  CLI::App* cmd_sample = app.add_subcommand("sample", "seeded uniform draws from a family");
  cmd_sample->fallthrough();
  cmd_sample->add_option("--n", n, "half-length")->required()->check(CLI::PositiveNumber);
  cmd_sample->add_option("--set", set_arg, "family: S A B Aprime Bprime T C D")->required();
  cmd_sample->add_option("--seed", seed, "generator seed")->required();
  cmd_sample->add_option("--count", draw_count, "number of draws")->check(CLI::PositiveNumber);
  cmd_sample->add_option("--format", format_arg, "tuple|jsonl");

  CLI::App* cmd_map = app.add_subcommand("map", "apply a bijection to one path or a JSONL stream");
  cmd_map->fallthrough();
  cmd_map->add_option("--bijection", bijection_arg, "phi1|psi1|phi1full|psi1full|phi2|psi2")
      ->required();
  cmd_map->add_option("--path", path_arg, "tuple \"(0,S_1,...,S_2n)\"; omit to read JSONL on stdin");

  CLI::App* cmd_verify = app.add_subcommand("verify", "exhaustive bijectivity and count checks");
  cmd_verify->fallthrough();
  cmd_verify->add_option("--n", n, "half-length (n_max for --check catalan)")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--check", check_arg, "bijection1|bijection2|counts|catalan|theorems|all")
      ->check(CLI::IsMember({"bijection1", "bijection2", "counts", "catalan", "theorems", "all"}));
  cmd_verify->add_option("--format", format_arg, "text|json");
  cmd_verify->add_option("--workers", workers, "parallel sweep hint")->check(CLI::PositiveNumber);
  cmd_verify->add_flag("--limit-override", limit_override, "allow n above the exhaustive limit");

  CLI::App* cmd_render = app.add_subcommand("render", "SVG gallery of (path, image) pairs");
  cmd_render->fallthrough();
  cmd_render->add_option("--n", n, "half-length")->required()->check(CLI::PositiveNumber);
  cmd_render->add_option("--bijection", bijection_arg, "phi1|psi1|phi1full|psi1full|phi2|psi2")
      ->required();
  cmd_render->add_option("--out", out_file, "output SVG file")->required();
  cmd_render->add_option("--columns", columns, "panels per row")->check(CLI::PositiveNumber);
  cmd_render->add_option("--cell", cell_arg, "panel size WxH in pixels");
  cmd_render->add_flag("--limit-override", limit_override, "allow n above the exhaustive limit");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return 0;
    err << app.help();
    return 2;
  }

  Config config;
  try {
    if (!config_path.empty()) load_config_file(config, config_path);
    load_env(config);
    if (limit_opt->count() > 0) config.exhaustive_limit = flag_limit;
    if (format_opt->count() > 0) config.output_format = parse_config_format(flag_format, "--output-format");
    if (cap_opt->count() > 0) config.counterexample_cap = flag_cap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const int effective_limit = limit_override ? std::max(n, config.exhaustive_limit)
                                             : config.exhaustive_limit;

  auto resolve_set = [&]() {
    auto s = set_from_name(set_arg);
    if (!s) raise(Errc::InvalidArgument, "unknown set \"" + set_arg + "\"");
    return *s;
  };
  auto resolve_bijection = [&]() {
    auto b = bijection_from_name(bijection_arg);
    if (!b) raise(Errc::InvalidArgument, "unknown bijection \"" + bijection_arg + "\"");
    return *b;
  };
  auto resolve_format = [&](std::initializer_list<OutputFormat> allowed) {
    OutputFormat fmt = config.output_format;
    if (!format_arg.empty()) fmt = parse_config_format(format_arg, "--format");
    if (std::find(allowed.begin(), allowed.end(), fmt) == allowed.end()) {
      raise(Errc::InvalidArgument, "format not supported by this subcommand");
    }
    return fmt;
  };

  try {
    if (app.got_subcommand(cmd_enumerate)) {
      const OutputFormat fmt = resolve_format({OutputFormat::Tuple, OutputFormat::Jsonl});
      for_each_member(n, resolve_set(), [&](const Path& p) { write_path(p, fmt, out); },
                      effective_limit);
      return 0;
    }

    if (app.got_subcommand(cmd_count)) {
      const SetId s = resolve_set();
      const Cardinality c = method_arg == "enumerate"
                                ? count_by_enumeration(n, s, effective_limit)
                                : count_formula(n, s);
      out << c.str() << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_sample)) {
      const OutputFormat fmt = resolve_format({OutputFormat::Tuple, OutputFormat::Jsonl});
      Sampler sampler(n, resolve_set(), seed);
      for (int i = 0; i < draw_count; ++i) write_path(sampler.next(), fmt, out);
      return 0;
    }

    if (app.got_subcommand(cmd_map)) {
      const BijectionId id = resolve_bijection();
      if (!path_arg.empty()) {
        out << serialize(apply_bijection(id, parse(path_arg))) << "\n";
        return 0;
      }
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        Path p = [&] {
          try {
            return path_from_json_line(line);
          } catch (const json::exception& e) {
            raise(Errc::SyntaxError, std::string("bad JSONL input: ") + e.what());
          }
        }();
        const Path image = apply_bijection(id, p);
        out << json{{"input", path_to_json(p)},
                    {"output", path_to_json(image)},
                    {"markers", markers_for(id, p)}}
                   .dump()
            << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(cmd_verify)) {
      bool as_json = config.output_format == OutputFormat::Json;
      if (!format_arg.empty()) {
        if (format_arg == "json") {
          as_json = true;
        } else if (format_arg == "text") {
          as_json = false;
        } else {
          raise(Errc::InvalidArgument, "verify formats are text or json");
        }
      }
      VerifyOptions opts;
      opts.exhaustive_limit = effective_limit;
      opts.counterexample_cap = config.counterexample_cap;
      opts.workers = workers;

      std::vector<VerifyReport> reports;
      const bool all = check_arg == "all";
      if (all || check_arg == "counts") reports.push_back(check_counts(n, opts));
      if (all || check_arg == "bijection1") {
        reports.push_back(check_bijection(n, BijectionId::Phi1, SetId::Aprime, SetId::Bprime, opts));
        reports.push_back(check_bijection(n, BijectionId::Phi1Full, SetId::A, SetId::B, opts));
      }
      if (check_arg == "bijection2" || (all && n >= 2)) {
        reports.push_back(check_bijection(n, BijectionId::Phi2, SetId::C, SetId::D, opts));
      } else if (all && n < 2) {
        err << "note: bijection2 needs n >= 2, skipped\n";
      }
      if (all || check_arg == "theorems") reports.push_back(check_theorem_invariants(n, opts));
      if (check_arg == "catalan" || (all && n >= 2)) {
        reports.push_back(check_catalan_identity(n));
      } else if (all && n < 2) {
        err << "note: catalan identity needs n >= 2, skipped\n";
      }

      if (as_json) {
        json list = json::array();
        for (const auto& r : reports) list.push_back(report_to_json(r));
        out << list.dump(2) << "\n";
      } else {
        for (const auto& r : reports) print_report_text(r, out);
      }
      const bool ok = std::all_of(reports.begin(), reports.end(),
                                  [](const VerifyReport& r) { return r.passed; });
      return ok ? 0 : 1;
    }

    if (app.got_subcommand(cmd_render)) {
      RenderSpec spec;
      if (columns > 0) spec.columns = columns;
      if (!cell_arg.empty()) {
        const CellSize cell = parse_cell(cell_arg);
        spec.cell_width = cell.width;
        spec.cell_height = cell.height;
      }
      const std::string svg = render_gallery(n, resolve_bijection(), spec, effective_limit);
      std::ofstream file(out_file, std::ios::binary);
      if (!file) raise(Errc::InvalidArgument, "cannot open \"" + out_file + "\" for writing");
      file << svg;
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "error: no subcommand\n";
  return 2;
}

}  // namespace pathmorph::cli

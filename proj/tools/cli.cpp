#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "acs/cohomology.hpp"
#include "acs/cs_engine.hpp"
#include "acs/error.hpp"
#include "acs/formats.hpp"
#include "acs/number_theory.hpp"

namespace acs::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  fail(ErrorKind::InvalidArgument, "unknown format '" + s + "' (expected text, json or csv)");
}

// key=value lines; '#' starts a comment.
std::optional<Format> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot read config file '" + path + "'");
  std::optional<Format> format;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorKind::InvalidArgument, "config line without '=': " + line);
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "default_format") {
      format = parse_format(value);
    } else {
      fail(ErrorKind::InvalidArgument, "unknown config key '" + key + "'");
    }
  }
  return format;
}

std::string csv_field(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// One result: `text` for humans, the ordered fields for json/csv.
void emit(std::ostream& out, Format format, const std::string& text, const Json& fields) {
  switch (format) {
    case Format::Text:
      out << text << '\n';
      break;
    case Format::Json:
      out << fields.dump() << '\n';
      break;
    case Format::Csv: {
      std::string header, row;
      for (const auto& [key, value] : fields.items()) {
        if (!header.empty()) {
          header += ',';
          row += ',';
        }
        header += key;
        row += csv_field(value);
      }
      out << header << '\n' << row << '\n';
      break;
    }
  }
}

Json cs_fields(const CsValue& v) {
  return Json{{"value", v.to_string()}, {"numerator", v.numerator()}, {"denominator", v.denominator()}};
}

Json preset_record(const Preset& preset, std::int64_t t, unsigned alpha, const CsValue& v) {
  Json j{{"t", t}, {"preset", preset.name()}, {"alpha", alpha}};
  j.update(cs_fields(v));
  return j;
}

std::string csv_preset_row(const Preset& preset, const ScanRecord& r) {
  return std::to_string(r.t) + "," + preset.name() + "," + std::to_string(r.alpha) + "," +
         std::to_string(r.value.numerator()) + "," + std::to_string(r.value.denominator());
}

constexpr const char* kPresetCsvHeader = "t,preset,alpha,numerator,denominator";

struct Options {
  std::string format;
  std::string config;

  // symbol / split / factor
  std::int64_t a = 0, m = 0;
  std::uint64_t p = 0;
  std::string value;

  // quad / biquad
  std::int64_t D = 0, t = 0, M = 0;
  std::string dlk;
  std::int64_t D1 = 0, D2 = 0, t1 = 0, t2 = 0;

  // preset / scan
  std::string preset;
  unsigned alpha = 1;
  std::int64_t t_max = 0;

  // cohomology
  std::string group;
  std::uint64_t n = 0;
  unsigned degree = 0;
  std::string file;
};

int cmd_symbol(const Options& o, Format f, std::ostream& out) {
  const int s = kronecker(o.a, o.m);
  emit(out, f, std::to_string(s), Json{{"a", o.a}, {"m", o.m}, {"symbol", s}});
  return kOk;
}

int cmd_split(const Options& o, Format f, std::ostream& out) {
  const std::string type(to_string(splitting_type(o.p, o.m)));
  emit(out, f, type, Json{{"p", o.p}, {"m", o.m}, {"type", type}});
  return kOk;
}

int cmd_factor(const Options& o, Format f, std::ostream& out) {
  const Factored v = parse_factored(o.value);
  Json factors = Json::array();
  for (const PrimePower& pp : v.factors()) {
    factors.push_back(Json{{"prime", pp.prime}, {"exponent", pp.exponent}});
  }
  if (f == Format::Csv) {
    out << "prime,exponent\n";
    for (const PrimePower& pp : v.factors()) out << pp.prime << ',' << pp.exponent << '\n';
    return kOk;
  }
  emit(out, f, v.to_string(),
       Json{{"value", v.value()}, {"factored", v.to_string()}, {"factors", factors}});
  return kOk;
}

int cmd_quad(const Options& o, Format f, std::ostream& out) {
  if (o.D <= 0) fail(ErrorKind::InvalidFamily, "D must be a squarefree integer > 1");
  QuadFamilyInput in{Factored(static_cast<std::uint64_t>(o.D)), o.t, o.M, parse_factored(o.dlk)};
  const std::vector<std::uint64_t> counted = counted_inert_primes(in);
  const CsValue v = cs_inert_count(in);
  Json j{{"D", o.D}, {"t", o.t}, {"M", o.M}, {"N", complementary_radicand(in)},
         {"dlk", in.dlk.to_string()}};
  j.update(cs_fields(v));
  if (f != Format::Csv) j["counted_primes"] = counted;
  emit(out, f, v.to_string(), j);
  return kOk;
}

int cmd_biquad(const Options& o, Format f, std::ostream& out) {
  const CsValue v = cs_biquadratic({o.D1, o.D2, o.t1, o.t2, o.M});
  Json j{{"D1", o.D1}, {"D2", o.D2}, {"t1", o.t1}, {"t2", o.t2}, {"M", o.M}};
  j.update(cs_fields(v));
  emit(out, f, v.to_string(), j);
  return kOk;
}

int cmd_preset(const Options& o, Format f, std::ostream& out) {
  const Preset preset = parse_preset(o.preset);
  const CsValue v = preset_eval(preset, o.t, o.alpha);
  if (f == Format::Csv) {
    out << kPresetCsvHeader << '\n' << csv_preset_row(preset, {o.t, o.alpha, v}) << '\n';
    return kOk;
  }
  emit(out, f, v.to_string(), preset_record(preset, o.t, o.alpha, v));
  return kOk;
}

int cmd_scan(const Options& o, Format f, std::ostream& out, std::ostream& err) {
  const Preset preset = parse_preset(o.preset);
  if (o.alpha < 1 || o.alpha > preset.alpha_count()) {
    fail(ErrorKind::InvalidFamily,
         "alpha must lie in 1.." + std::to_string(preset.alpha_count()) + " for " + preset.name());
  }
  if (o.t_max < 2) fail(ErrorKind::InvalidArgument, "--t-max must be at least 2");
  const std::vector<ScanRecord> records = scan(preset, o.alpha, o.t_max);
  const DensityResult d = summarize(records);
  const std::uint64_t total = d.count_half + d.count_zero;
  const std::string density = total == 0 ? "0.000000" : fixed6(d.count_half, total);

  if (f == Format::Csv) {
    out << kPresetCsvHeader << '\n';
    for (const ScanRecord& r : records) out << csv_preset_row(preset, r) << '\n';
  } else if (f == Format::Json) {
    for (const ScanRecord& r : records) out << preset_record(preset, r.t, r.alpha, r.value).dump() << '\n';
  } else {
    for (const ScanRecord& r : records) out << r.t << ' ' << r.value.to_string() << '\n';
  }

  Json summary{{"summary", true},          {"preset", preset.name()}, {"alpha", o.alpha},
               {"t_max", o.t_max},          {"count_half", d.count_half},
               {"count_zero", d.count_zero}, {"density", density}};
  if (f == Format::Json) {
    out << summary.dump() << '\n';
  } else if (f == Format::Csv) {
    err << "count_half=" << d.count_half << " count_zero=" << d.count_zero
        << " density=" << density << '\n';
  } else {
    out << "count_half " << d.count_half << "\ncount_zero " << d.count_zero << "\ndensity "
        << density << '\n';
  }
  return kOk;
}

int cmd_twist(const Options& o, Format f, std::ostream& out) {
  if (o.n < 2) fail(ErrorKind::InvalidArgument, "--n must be at least 2");
  std::string status;
  std::size_t pairs = 0;
  std::size_t verified = 0;
  const std::optional<SplitGroup> split = resolve_split_group(o.group);
  if (split && split->section.source()->order() == o.n) {
    pairs = 1;
    verified = twist_verify(split->section, split->projection) ? 1 : 0;
  } else {
    const GroupPtr g = resolve_group(o.group);
    const std::vector<SplitPair> all = enumerate_split_pairs(g, o.n);
    pairs = all.size();
    for (const SplitPair& pair : all) verified += twist_verify(pair.section, pair.projection) ? 1 : 0;
  }
  status = pairs == 0 ? "no-section" : verified == pairs ? "verified" : "not-verified";
  emit(out, f, status,
       Json{{"group", o.group}, {"n", o.n}, {"pairs", pairs}, {"verified", verified},
            {"status", status}});
  return status == "not-verified" ? kVerificationFailed : kOk;
}

int cmd_generator_order(const Options& o, Format f, std::ostream& out) {
  if (o.n < 2 || o.n > kMaxGroupOrder) {
    fail(ErrorKind::InvalidArgument, "--n must lie in 2.." + std::to_string(kMaxGroupOrder));
  }
  const std::uint64_t order = class_order(cyclic_generator(static_cast<Residue>(o.n)));
  emit(out, f, std::to_string(order), Json{{"n", o.n}, {"class_order", order}});
  return kOk;
}

int cmd_cochain_check(const Options& o, Format f, std::ostream& out) {
  if (o.n < 2 || o.n > 0xffffffffULL) fail(ErrorKind::InvalidArgument, "--n must be at least 2");
  const GroupPtr g = resolve_group(o.group);
  std::ifstream in(o.file);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot read cochain file '" + o.file + "'");
  const Cochain c = read_cochain(in, g, o.degree, static_cast<Residue>(o.n));
  const bool cocycle = is_cocycle(c);
  Json j{{"group", o.group}, {"degree", o.degree}, {"n", o.n}, {"cocycle", cocycle}};
  std::string text = cocycle ? "cocycle" : "not-cocycle";
  if (cocycle) {
    const std::uint64_t order = class_order(CohClass(c));
    j["class_order"] = order;
    text += "\nclass-order " + std::to_string(order);
  }
  emit(out, f, text, j);
  return kOk;
}

}  // namespace

std::string fixed6(std::uint64_t num, std::uint64_t den) {
  const unsigned __int128 scaled = (static_cast<unsigned __int128>(num) * 2000000 + den) / (2 * den);
  const auto whole = static_cast<std::uint64_t>(scaled / 1000000);
  const auto frac = static_cast<std::uint64_t>(scaled % 1000000);
  std::string frac_text = std::to_string(frac);
  return std::to_string(whole) + "." + std::string(6 - frac_text.size(), '0') + frac_text;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic Chern-Simons invariants of number-field families", "acs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format: text, json or csv");
  app.add_option("--config", o.config, "key=value config file (default: $ACS_CONFIG)");

  auto* symbol = app.add_subcommand("symbol", "Kronecker symbol (a/m)");
  symbol->add_option("a", o.a)->required();
  symbol->add_option("m", o.m)->required();

  auto* split = app.add_subcommand("split", "Decomposition of p in Q(sqrt m)");
  split->add_option("p", o.p)->required();
  split->add_option("m", o.m)->required();

  auto* factor = app.add_subcommand("factor", "Prime factorization");
  factor->add_option("v", o.value, "Integer or product such as 3^4*5^2")->required();

  auto* quad = app.add_subcommand("quad", "Inert-count invariant from raw family data");
  quad->add_option("--D", o.D)->required();
  quad->add_option("--t", o.t)->required();
  quad->add_option("--M", o.M)->required();
  quad->add_option("--dlk", o.dlk, "Relative discriminant norm, e.g. 3^4*5^2*29^2")->required();

  auto* biquad = app.add_subcommand("biquad", "Biquadratic family invariant");
  biquad->add_option("--D1", o.D1)->required();
  biquad->add_option("--D2", o.D2)->required();
  biquad->add_option("--t1", o.t1)->required();
  biquad->add_option("--t2", o.t2)->required();
  biquad->add_option("--M", o.M)->required();

  auto* preset = app.add_subcommand("preset", "Evaluate a named family at t");
  preset->add_option("name", o.preset)->required();
  preset->add_option("--alpha", o.alpha);
  preset->add_option("--t", o.t)->required();

  auto* scan_cmd = app.add_subcommand("scan", "Evaluate a named family over t <= t-max");
  scan_cmd->add_option("name", o.preset)->required();
  scan_cmd->add_option("--alpha", o.alpha);
  scan_cmd->add_option("--t-max", o.t_max)->required();

  auto* twist = app.add_subcommand("twist", "Verify the semidirect-product twist");
  twist->add_option("--group", o.group, "zn:<n>, s3, d4, q8, heis:<d>:<n>, gl2:<q> or a file")->required();
  twist->add_option("--n", o.n)->required();

  auto* gen = app.add_subcommand("generator-order", "Order of Id u d(Id) in H^3(Z/n, Z/n)");
  gen->add_option("--n", o.n)->required();

  auto* check = app.add_subcommand("cochain-check", "Cocycle test and class order of a dumped cochain");
  check->add_option("--group", o.group)->required();
  check->add_option("--n", o.n)->required();
  check->add_option("--degree", o.degree)->required();
  check->add_option("--file", o.file)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    Format format = Format::Text;
    std::string config_path = o.config;
    if (config_path.empty()) {
      if (const char* env = std::getenv("ACS_CONFIG"); env && *env) config_path = env;
    }
    if (!config_path.empty()) {
      if (auto configured = read_config(config_path)) format = *configured;
    }
    if (!o.format.empty()) format = parse_format(o.format);

    if (*symbol) return cmd_symbol(o, format, out);
    if (*split) return cmd_split(o, format, out);
    if (*factor) return cmd_factor(o, format, out);
    if (*quad) return cmd_quad(o, format, out);
    if (*biquad) return cmd_biquad(o, format, out);
    if (*preset) return cmd_preset(o, format, out);
    if (*scan_cmd) return cmd_scan(o, format, out, err);
    if (*twist) return cmd_twist(o, format, out);
    if (*gen) return cmd_generator_order(o, format, out);
    if (*check) return cmd_cochain_check(o, format, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_cap_violation() ? kCapExceeded : kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace acs::cli

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dbseq/generators.hpp"
#include "dbseq/joining.hpp"
#include "dbseq/verify.hpp"
#include "dbseq/words.hpp"

namespace dbseq::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { words, symbols, json_trace };

Format parse_format(const std::string& text) {
  if (text == "words") return Format::words;
  if (text == "symbols") return Format::symbols;
  if (text == "json-trace") return Format::json_trace;
  throw UsageError("unknown format: " + text);
}

Method parse_method_or_throw(const std::string& text) {
  auto m = parse_method(text);
  if (!m) throw UsageError("unknown method: " + text);
  return *m;
}

Variant parse_variant_or_throw(const std::string& text) {
  auto v = parse_variant(text);
  if (!v) throw UsageError("unknown variant: " + text);
  return *v;
}

Variant default_variant(Method m) {
  switch (m) {
    case Method::greedy: return Variant::pmx;
    case Method::fkm: return Variant::pmn;
    default: return Variant::rpmx;
  }
}

void require_params(std::size_t n, std::uint64_t k) {
  if (n == 0) throw UsageError("-n must be at least 1");
  if (k == 0) throw UsageError("-k must be at least 1");
  if (k > std::numeric_limits<Symbol>::max()) throw UsageError("-k too large");
}

void guard(std::optional<std::uint64_t> words, bool allow_large) {
  if (allow_large) return;
  const std::uint64_t bound = default_word_bound();
  if (!words || *words > bound)
    throw GuardError("refusing to produce more than " + std::to_string(bound) +
                     " words; pass --allow-large or raise DBSEQ_MAX_WORDS");
}

void print_words(std::ostream& out, const DBSequence& seq, bool comma) {
  std::string buffer;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    buffer += to_string(seq.word(i), comma);
    buffer.push_back('\n');
    if (buffer.size() > (1u << 16)) {
      out << buffer;
      buffer.clear();
    }
  }
  out << buffer;
}

void print_symbols(std::ostream& out, const std::vector<Symbol>& symbols, bool comma) {
  out << to_string(Word(symbols), comma) << '\n';
}

/// Digits while every symbol fits in one; streams have no k, so the
/// alphabet is the smallest [k] holding the prefix.
bool commas_for(const DBSequence& seq) {
  if (seq.k()) return uses_commas(*seq.k());
  Symbol top = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (Symbol s : seq.view(i)) top = std::max(top, s);
  return uses_commas(top + 1);
}

nlohmann::json trace_json(const JoinTrace& trace) {
  const bool comma = uses_commas(trace.k());
  nlohmann::json cycles = nlohmann::json::array();
  const auto& cs = trace.cycles();
  for (std::size_t m = 0; m < cs.size(); ++m) {
    const auto& c = cs[m];
    cycles.push_back({
        {"index", m},
        {"key", to_string(c.key, comma)},
        {"first", to_string(c.first, comma)},
        {"last", to_string(c.last, comma)},
        {"anchor", c.anchor ? nlohmann::json(to_string(*c.anchor, comma)) : nlohmann::json()},
        {"open_position", c.open_position},
        {"close_position", c.close_position},
    });
  }
  nlohmann::json order = nlohmann::json::array();
  for (std::size_t i = 0; i < trace.size(); ++i) order.push_back(to_string(trace.word_at(i), comma));
  return {{"n", trace.n()}, {"k", trace.k()}, {"cycles", cycles}, {"order", order}};
}

struct GenerateArgs {
  std::string method;
  std::string variant;
  std::size_t n = 0;
  std::uint64_t k = 0;
  std::string format = "words";
  bool allow_large = false;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  require_params(a.n, a.k);
  const Method method = parse_method_or_throw(a.method);
  const Variant variant = a.variant.empty() ? default_variant(method)
                                            : parse_variant_or_throw(a.variant);
  const Format format = parse_format(a.format);
  if (format == Format::json_trace && (method != Method::cycle_join || variant != Variant::rpmx))
    throw UsageError("json-trace needs --method cycle-join --variant rpmx");
  guard(checked_power(a.k, a.n), a.allow_large);

  const auto k = static_cast<Symbol>(a.k);
  if (format == Format::json_trace) {
    out << trace_json(build(a.n, k, true)).dump(2) << '\n';
    return kPass;
  }
  const DBSequence seq = generate(GeneratorSpec{method, variant, a.n, k, std::nullopt});
  if (format == Format::words)
    print_words(out, seq, uses_commas(k));
  else
    print_symbols(out, word_stream_to_symbols(seq), uses_commas(k));
  return kPass;
}

struct StreamArgs {
  std::size_t n = 0;
  std::size_t limit = 0;
  std::string format = "words";
  bool allow_large = false;
};

int cmd_stream(const StreamArgs& a, std::ostream& out) {
  if (a.n == 0) throw UsageError("-n must be at least 1");
  if (a.limit == 0) throw UsageError("--limit must be at least 1");
  const Format format = parse_format(a.format);
  if (format == Format::json_trace) throw UsageError("json-trace is only for generate");
  guard(a.limit, a.allow_large);

  const DBSequence seq = stream_rpmx(a.n, a.limit);
  const bool comma = commas_for(seq);
  if (format == Format::words)
    print_words(out, seq, comma);
  else
    print_symbols(out, word_stream_to_symbols(seq), comma);
  return kPass;
}

struct VerifyArgs {
  std::size_t n = 0;
  std::uint64_t k = 0;
  std::string suite = "all";
  bool json = false;
  bool allow_large = false;
};

const Method kAllMethods[] = {Method::greedy, Method::cycle_join, Method::shift_rule, Method::fkm};

std::vector<CheckReport> db_suite(std::size_t n, Symbol k) {
  std::vector<CheckReport> out;
  for (Method m : kAllMethods) {
    const Variant native = native_variant(m, default_variant(m));
    auto report = check_db(generate(GeneratorSpec{m, native, n, k, std::nullopt}), n, k);
    report.name = "db:" + std::string(to_string(m)) + ":" + std::string(to_string(native));
    out.push_back(std::move(report));
  }
  return out;
}

std::vector<CheckReport> equal_suite(std::size_t n, Symbol k, const std::vector<Method>& methods) {
  std::vector<CheckReport> out;
  const auto spec = [&](Method m) { return GeneratorSpec{m, Variant::rpmx, n, k, std::nullopt}; };
  const DBSequence reference = generate(spec(methods.front()));
  for (std::size_t i = 1; i < methods.size(); ++i) {
    auto report = check_equal(reference, generate(spec(methods[i])));
    report.name = "equal:" + std::string(to_string(methods.front())) + "=" +
                  std::string(to_string(methods[i]));
    out.push_back(std::move(report));
  }
  return out;
}

std::vector<CheckReport> structure_suite(std::size_t n, Symbol k) {
  auto out = check_structure_suite(build(n, k, true));
  for (auto& r : out) r.name = "structure:" + r.name;
  // Stepping every intermediate ordering is quadratic; keep it to small runs.
  if (*checked_power(k, n) <= 4096) out.push_back(check_build_invariants(n, k));
  return out;
}

std::vector<CheckReport> onion_suite(std::size_t n, Symbol k) {
  std::vector<CheckReport> out;
  out.push_back(check_onion(n, std::max<Symbol>(k, 2)));
  auto stream = check_equal(stream_rpmx(n, *checked_power(k, n)), build(n, k, false).sequence());
  stream.name = "stream-prefix";
  stream.k = k;
  out.push_back(std::move(stream));
  return out;
}

int report(const std::vector<CheckReport>& reports, bool json, std::ostream& out) {
  bool ok = true;
  if (json) {
    nlohmann::json all = nlohmann::json::array();
    for (const auto& r : reports) all.push_back(to_json(r));
    out << all.dump(2) << '\n';
  } else {
    for (const auto& r : reports) out << to_line(r) << '\n';
  }
  for (const auto& r : reports) ok = ok && r.pass;
  return ok ? kPass : kCheckFailed;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  require_params(a.n, a.k);
  if (a.suite != "db" && a.suite != "structure" && a.suite != "onion" && a.suite != "all")
    throw UsageError("unknown suite: " + a.suite);
  // The onion suite also builds the (n, k+1) join.
  guard(checked_power(a.k + 1, a.n), a.allow_large);

  const auto k = static_cast<Symbol>(a.k);
  std::vector<CheckReport> reports;
  auto add = [&](std::vector<CheckReport> more) {
    for (auto& r : more) reports.push_back(std::move(r));
  };
  if (a.suite == "db" || a.suite == "all") add(db_suite(a.n, k));
  if (a.suite == "structure" || a.suite == "all") add(structure_suite(a.n, k));
  if (a.suite == "onion" || a.suite == "all") add(onion_suite(a.n, k));
  if (a.suite == "all")
    add(equal_suite(a.n, k, std::vector<Method>(std::begin(kAllMethods), std::end(kAllMethods))));
  return report(reports, a.json, out);
}

struct CompareArgs {
  std::size_t n = 0;
  std::uint64_t k = 0;
  std::vector<std::string> methods;
  bool json = false;
  bool allow_large = false;
};

int cmd_compare(const CompareArgs& a, std::ostream& out) {
  require_params(a.n, a.k);
  std::vector<Method> methods;
  for (const auto& text : a.methods) {
    const Method m = parse_method_or_throw(text);
    if (std::find(methods.begin(), methods.end(), m) != methods.end())
      throw UsageError("method listed twice: " + text);
    methods.push_back(m);
  }
  if (methods.size() < 2) throw UsageError("compare needs at least two methods");
  guard(checked_power(a.k, a.n), a.allow_large);
  return report(equal_suite(a.n, static_cast<Symbol>(a.k), methods), a.json, out);
}

}  // namespace

std::uint64_t default_word_bound() {
  if (const char* env = std::getenv("DBSEQ_MAX_WORDS")) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return std::uint64_t{1} << 22;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"De Bruijn sequence generator and verifier", "dbseq"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "print a complete (n,k) sequence");
  generate_cmd->add_option("--method", gen.method, "greedy, cycle-join, shift-rule or fkm")
      ->required();
  generate_cmd->add_option("--variant", gen.variant,
                           "pmx, pmn, rpmx or rpmn (default: the method's native one)");
  generate_cmd->add_option("-n,--length", gen.n, "word length")->required();
  generate_cmd->add_option("-k,--alphabet", gen.k, "alphabet size")->required();
  generate_cmd->add_option("--format", gen.format, "words, symbols or json-trace");
  generate_cmd->add_flag("--allow-large", gen.allow_large, "lift the word-count guard");

  StreamArgs stream;
  auto* stream_cmd = app.add_subcommand("stream", "print a prefix of the infinite rpmx(n)");
  stream_cmd->add_option("-n,--length", stream.n, "word length")->required();
  stream_cmd->add_option("--limit", stream.limit, "number of words")->required();
  stream_cmd->add_option("--format", stream.format, "words or symbols");
  stream_cmd->add_flag("--allow-large", stream.allow_large, "lift the word-count guard");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run checks for one (n,k)");
  verify_cmd->add_option("-n,--length", verify.n, "word length")->required();
  verify_cmd->add_option("-k,--alphabet", verify.k, "alphabet size")->required();
  verify_cmd->add_option("--suite", verify.suite, "db, structure, onion or all");
  verify_cmd->add_flag("--json", verify.json, "JSON report");
  verify_cmd->add_flag("--allow-large", verify.allow_large, "lift the word-count guard");

  CompareArgs compare;
  auto* compare_cmd = app.add_subcommand("compare", "check that methods agree on rpmx(n,k)");
  compare_cmd->add_option("-n,--length", compare.n, "word length")->required();
  compare_cmd->add_option("-k,--alphabet", compare.k, "alphabet size")->required();
  compare_cmd->add_option("--methods", compare.methods, "comma-separated methods")
      ->required()
      ->delimiter(',');
  compare_cmd->add_flag("--json", compare.json, "JSON report");
  compare_cmd->add_flag("--allow-large", compare.allow_large, "lift the word-count guard");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*generate_cmd) return cmd_generate(gen, out);
    if (*stream_cmd) return cmd_stream(stream, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*compare_cmd) return cmd_compare(compare, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceGuard;
  }
  return kUsage;
}

}  // namespace dbseq::cli

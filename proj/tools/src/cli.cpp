#include "braidorder_cli/cli.hpp"

#include <algorithm>
#include <exception>
#include <ostream>

#include "CLI11.hpp"
#include "braidorder/braid.hpp"
#include "braidorder/canonical.hpp"
#include "braidorder/cutting.hpp"
#include "braidorder/geometry.hpp"
#include "braidorder/oracle.hpp"
#include "braidorder/order.hpp"
#include "json.hpp"

namespace braidorder::cli {

using nlohmann::json;

namespace {

std::string_view kind_name(SignResult::Kind k) {
  switch (k) {
    case SignResult::Kind::trivial:
      return "trivial";
    case SignResult::Kind::positive:
      return "positive";
    case SignResult::Kind::negative:
      return "negative";
  }
  return "unknown";
}

json sign_json(const SignResult& r) {
  json j;
  j["kind"] = kind_name(r.kind);
  j["index"] = r.kind == SignResult::Kind::trivial ? json(nullptr) : json(r.index);
  return j;
}

std::string_view ordering_symbol(std::strong_ordering o) {
  if (o < 0) return "<";
  if (o > 0) return ">";
  return "=";
}

}  // namespace

int resolve_strands(const CliConfig& config,
                    const std::vector<std::string_view>& words) {
  if (config.strands) {
    if (*config.strands < 2) {
      throw ParseError("strand count must be at least 2");
    }
    return *config.strands;
  }
  int top = 0;
  for (auto w : words) top = std::max(top, max_generator_index(w));
  return std::max(2, top + 1);
}

std::string cmd_sign(std::string_view word, const CliConfig& config) {
  const BraidWord w = parse_word(word, resolve_strands(config, {word}));
  const SignResult r = sign(w);
  if (config.output == Output::json) return sign_json(r).dump();
  return format_sign(r);
}

std::string cmd_compare(std::string_view a, std::string_view b,
                        const CliConfig& config) {
  const int n = resolve_strands(config, {a, b});
  const auto o = compare(parse_word(a, n), parse_word(b, n));
  if (config.output == Output::json) {
    return json{{"result", ordering_symbol(o)}}.dump();
  }
  return std::string(ordering_symbol(o));
}

std::string cmd_canonical(std::string_view word, const CliConfig& config) {
  const BraidWord w = parse_word(word, resolve_strands(config, {word}));
  const CanonicalResult r = canonical_form(w);
  if (config.output == Output::json) {
    return json{{"word", format_word(r.word)},
                {"letters", r.word.to_ints()},
                {"strands", w.strands()},
                {"sign", sign_json(r.sign)},
                {"iterations", r.iterations}}
        .dump();
  }
  return format_word(r.word);
}

std::string cmd_cutseq(std::string_view word, const CliConfig& config) {
  const BraidWord w = parse_word(word, resolve_strands(config, {word}));
  const CuttingSequence s = word_to_cutseq(w);
  if (config.output == Output::json) {
    return json{{"sequence", format_sequence(s)}, {"strands", s.strands()}}
        .dump();
  }
  return format_sequence(s);
}

std::string cmd_validate(std::string_view sequence, const CliConfig& config) {
  const CutLetters letters = parse_letters(sequence);
  int n = 0;
  if (config.strands) {
    n = *config.strands;
  } else {
    for (const auto& c : letters) {
      if (c.is_hole()) n = std::max(n, c.value - 1);
    }
  }
  std::string reason;
  std::string detail;
  if (auto bad = check_sequence(n, letters)) {
    reason = "malformed";
    detail = *bad;
  } else {
    const Validation v = validate(CuttingSequence(n, letters));
    if (!v.valid()) {
      reason = reason_name(v.reason);
      detail = v.detail;
    }
  }
  if (config.output == Output::json) {
    json j{{"valid", reason.empty()}, {"strands", n}};
    j["reason"] = reason.empty() ? json(nullptr) : json(reason);
    j["detail"] = reason.empty() ? json(nullptr) : json(detail);
    return j.dump();
  }
  return reason.empty() ? "valid" : "invalid: " + reason;
}

std::string cmd_equal(std::string_view a, std::string_view b,
                      const CliConfig& config) {
  const int n = resolve_strands(config, {a, b});
  const bool eq = braid_equal(parse_word(a, n), parse_word(b, n));
  if (config.output == Output::json) return json{{"equal", eq}}.dump();
  return eq ? "true" : "false";
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Braid group order, cutting sequences and canonical forms",
               "braidorder"};
  app.require_subcommand(1);

  CliConfig config;
  std::optional<int> strands;
  bool as_json = false;
  std::string first;
  std::string second;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-n,--strands", strands, "Number of strands");
    sub->add_flag("--json", as_json, "Emit JSON");
  };
  auto one = [&](const char* name, const char* help, const char* arg) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    sub->add_option(arg, first)->required();
    return sub;
  };
  auto two = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    sub->add_option("a", first)->required();
    sub->add_option("b", second)->required();
    return sub;
  };

  CLI::App* sign_cmd = one("sign", "Sign of a braid word", "word");
  CLI::App* canonical_cmd = one("canonical", "Left-consistent canonical form", "word");
  CLI::App* cutseq_cmd = one("cutseq", "Reduced cutting sequence of a word", "word");
  CLI::App* validate_cmd = one("validate", "Check a cutting sequence", "sequence");
  CLI::App* compare_cmd = two("compare", "Order of two braid words");
  CLI::App* equal_cmd = two("equal", "Equality of two braid words");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  config.strands = strands;
  config.output = as_json ? Output::json : Output::plain;
  try {
    std::string text;
    if (sign_cmd->parsed()) {
      text = cmd_sign(first, config);
    } else if (canonical_cmd->parsed()) {
      text = cmd_canonical(first, config);
    } else if (cutseq_cmd->parsed()) {
      text = cmd_cutseq(first, config);
    } else if (validate_cmd->parsed()) {
      text = cmd_validate(first, config);
    } else if (compare_cmd->parsed()) {
      text = cmd_compare(first, second, config);
    } else if (equal_cmd->parsed()) {
      text = cmd_equal(first, second, config);
    }
    out << text << '\n';
    return 0;
  } catch (const InternalError& e) {
    err << "braidorder: internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "braidorder: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace braidorder::cli

#include "schub/cli.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "schub/qdeg.hpp"
#include "schub/render.hpp"

namespace schub {

namespace {

using json = nlohmann::ordered_json;
using steady = std::chrono::steady_clock;

long long ms_since(steady::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(steady::now() -
                                                               t0)
      .count();
}

space resolve_space(const std::string& text, int n, int k) {
  space_spec spec = parse_space_spec(text);
  if (spec.has_params) {
    if (n > 0 && n != spec.n)
      throw parse_error("--n disagrees with the space spec '" + text + "'");
    if (k > 0 && k != spec.k)
      throw parse_error("--k disagrees with the space spec '" + text + "'");
    n = spec.n;
    k = spec.k;
  } else if (n <= 0 || k <= 0) {
    throw parse_error("--n and --k are required when --space is a bare family");
  }
  return make_space(spec.fam, n, k);
}

model resolve_model(const std::string& text, const space& sp) {
  return text.empty() ? native_model(sp) : parse_model(text);
}

json do_convert(const space& sp, model from, model to,
                const std::string& payload) {
  const auto t0 = steady::now();
  std::vector<int> v = parse_payload(from, payload, sp);
  std::vector<int> w = convert(from, to, v, sp);
  json j;
  j["input"] = payload;
  j["space"] = sp.name();
  j["model"] = std::string(model_name(from)) + "->" + model_name(to);
  j["result"] = payload_to_string(to, w, sp);
  j["timing"] = ms_since(t0);
  return j;
}

json do_nbhd(const space& sp, model m, const std::string& payload, int d) {
  const auto t0 = steady::now();
  std::vector<int> v = parse_payload(m, payload, sp);
  std::vector<int> w = nbhd(m, sp, v, d);
  json j;
  j["input"] = payload;
  j["space"] = sp.name();
  j["model"] = model_name(m);
  j["result"] = payload_to_string(m, w, sp);
  j["timing"] = ms_since(t0);
  return j;
}

json do_mindeg(const space& sp, model m, const std::string& lam_text,
               const std::string& mu_text, degree_answer& ans) {
  const auto t0 = steady::now();
  const model nat = native_model(sp);
  parts lam = convert(m, nat, parse_payload(m, lam_text, sp), sp);
  parts mu = convert(m, nat, parse_payload(m, mu_text, sp), sp);
  ans = min_degree_diagram(sp, lam, mu);
  json j;
  j["input"] = json{{"lambda", lam_text}, {"mu", mu_text}};
  j["space"] = sp.name();
  j["model"] = model_name(nat);
  j["result"] = json{{"d", ans.d}, {"witness", parts_to_string(ans.witness)}};
  json chain = json::array();
  for (const parts& p : ans.chain) chain.push_back(parts_to_string(p));
  j["chain"] = std::move(chain);
  j["timing"] = ms_since(t0);
  return j;
}

json do_diagram(const space& sp, model m, const std::string& payload) {
  const auto t0 = steady::now();
  const model nat = native_model(sp);
  parts p = convert(m, nat, parse_payload(m, payload, sp), sp);
  json j;
  j["input"] = payload;
  j["space"] = sp.name();
  j["model"] = model_name(nat);
  j["result"] = ascii_diagram(p);
  j["timing"] = ms_since(t0);
  return j;
}

std::vector<space> verify_targets(const std::string& text, int n, int k,
                                  int max_letters) {
  if (text.empty()) return all_spaces(max_letters);
  space_spec spec = parse_space_spec(text);
  if (spec.has_params || (n > 0 && k > 0))
    return {resolve_space(text, n, k)};
  std::vector<space> out;
  for (const space& sp : all_spaces(max_letters))
    if (sp.fam == spec.fam) out.push_back(sp);
  return out;
}

json do_verify(const std::vector<space>& targets, int threads, int max_letters,
               std::vector<verify_report>& reports) {
  const auto t0 = steady::now();
  json results = json::array();
  for (const space& sp : targets) {
    verify_report rep = cross_verify(sp, threads, max_letters);
    json r;
    r["space"] = rep.space_name;
    r["pairs"] = rep.pairs;
    r["mismatches"] = rep.mismatches;
    r["millis"] = rep.millis;
    if (rep.mismatches > 0) r["samples"] = rep.first_mismatches;
    results.push_back(std::move(r));
    reports.push_back(std::move(rep));
  }
  json j;
  j["input"] = json{{"max_letters", max_letters}, {"threads", threads}};
  j["space"] = "all";
  j["model"] = "all";
  j["result"] = std::move(results);
  j["timing"] = ms_since(t0);
  return j;
}

void print_mindeg(std::ostream& out, const degree_answer& ans,
                  const parts& lam0, bool diagrams) {
  out << "d = " << ans.d << "\n";
  if (diagrams) out << "lambda^0 = " << parts_to_string(lam0) << "\n"
                    << ascii_diagram(lam0);
  for (size_t t = 0; t < ans.chain.size(); ++t) {
    out << "lambda^" << (t + 1) << " = " << parts_to_string(ans.chain[t])
        << "\n";
    if (diagrams) out << ascii_diagram(ans.chain[t]);
  }
}

// Dispatches one batch request; returns the reply and fills `code` with the
// severity (0 ok, 2 parse, 3 domain, 4 internal), mirroring the exit codes.
json run_request(const json& req, int& code) {
  code = 0;
  const std::string command = req.at("command").get<std::string>();
  if (command == "verify") {
    const int max_letters = req.value("max_letters", 10);
    const int threads = req.value("threads", 0);
    std::vector<verify_report> reports;
    json j = do_verify(verify_targets(req.value("space", std::string()),
                                      req.value("n", 0), req.value("k", 0),
                                      max_letters),
                       threads, max_letters, reports);
    for (const verify_report& rep : reports)
      if (rep.mismatches > 0) code = 4;
    return j;
  }
  const space sp = resolve_space(req.at("space").get<std::string>(),
                                 req.value("n", 0), req.value("k", 0));
  if (command == "convert")
    return do_convert(sp, parse_model(req.at("from").get<std::string>()),
                      parse_model(req.at("to").get<std::string>()),
                      req.at("payload").get<std::string>());
  if (command == "nbhd")
    return do_nbhd(sp,
                   resolve_model(req.value("model", std::string()), sp),
                   req.at("payload").get<std::string>(),
                   req.value("degree", 1));
  if (command == "mindeg") {
    degree_answer ans;
    return do_mindeg(sp, resolve_model(req.value("model", std::string()), sp),
                     req.at("lambda").get<std::string>(),
                     req.at("mu").get<std::string>(), ans);
  }
  if (command == "diagram")
    return do_diagram(sp,
                      resolve_model(req.value("model", std::string()), sp),
                      req.at("payload").get<std::string>());
  throw parse_error("batch: unknown command '" + command + "'");
}

int run_batch(std::istream& in, std::ostream& out) {
  int severity = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    int code = 0;
    json reply;
    try {
      reply = run_request(json::parse(line), code);
    } catch (const parse_error& e) {
      code = 2;
      reply = json{{"error", e.what()}, {"code", 2}};
    } catch (const model_error& e) {
      code = 3;
      reply = json{{"error", e.what()}, {"code", 3}};
    } catch (const internal_error& e) {
      code = 4;
      reply = json{{"error", e.what()}, {"code", 4}};
    } catch (const std::exception& e) {  // malformed JSON or missing fields
      code = 2;
      reply = json{{"error", e.what()}, {"code", 2}};
    }
    out << reply.dump() << "\n";
    severity = std::max(severity, code);
  }
  return severity;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{
      "curve neighborhoods and minimum quantum degrees of Schubert classes "
      "in Gr(k,n), IG(k,2n), OG(k,2n+1)"};
  app.name("qdeg");
  app.require_subcommand(1);

  std::string space_text, model_text, from_text, to_text;
  std::string payload, lambda_text, mu_text;
  int n = 0, k = 0, degree = 1, max_letters = 10, threads = 0;
  bool as_json = false, diagrams = false;

  const char* space_help = "Gr|IG|OG or Gr(k,n)|IG(k,2n)|OG(k,2n+1)";
  const char* model_help = "kstrict|pprime|window|word";

  CLI::App* c_convert =
      app.add_subcommand("convert", "re-express an index in another model");
  c_convert->add_option("--space,-s", space_text, space_help)->required();
  c_convert->add_option("--n", n, "n of the family");
  c_convert->add_option("--k", k, "k of the family");
  c_convert->add_option("--from", from_text, model_help)->required();
  c_convert->add_option("--to", to_text, model_help)->required();
  c_convert->add_option("payload,--input", payload, "index in the from-model")
      ->required();
  c_convert->add_flag("--json", as_json, "emit JSON");

  CLI::App* c_nbhd = app.add_subcommand(
      "nbhd", "degree-d curve neighborhood of a Schubert class");
  c_nbhd->add_option("--space,-s", space_text, space_help)->required();
  c_nbhd->add_option("--n", n, "n of the family");
  c_nbhd->add_option("--k", k, "k of the family");
  c_nbhd->add_option("--model,-m", model_text, model_help);
  c_nbhd->add_option("--d,-d", degree, "degree (default 1)");
  c_nbhd->add_option("payload,--input", payload, "index in --model")
      ->required();
  c_nbhd->add_flag("--json", as_json, "emit JSON");

  CLI::App* c_mindeg = app.add_subcommand(
      "mindeg", "minimum d with q^d in the quantum product of two classes");
  c_mindeg->add_option("--space,-s", space_text, space_help)->required();
  c_mindeg->add_option("--n", n, "n of the family");
  c_mindeg->add_option("--k", k, "k of the family");
  c_mindeg->add_option("--model", model_text, model_help);
  c_mindeg->add_option("--l,--lambda", lambda_text, "class lambda")
      ->required();
  c_mindeg->add_option("--m,--mu", mu_text, "class mu")->required();
  c_mindeg->add_flag("--diagrams", diagrams, "render the chain as diagrams");
  c_mindeg->add_flag("--json", as_json, "emit JSON");

  CLI::App* c_diagram =
      app.add_subcommand("diagram", "ASCII Young diagram of a class");
  c_diagram->add_option("--space,-s", space_text, space_help)->required();
  c_diagram->add_option("--n", n, "n of the family");
  c_diagram->add_option("--k", k, "k of the family");
  c_diagram->add_option("--model,-m", model_text, model_help);
  c_diagram->add_option("payload,--input", payload, "index in --model")
      ->required();
  c_diagram->add_flag("--json", as_json, "emit JSON");

  CLI::App* c_verify = app.add_subcommand(
      "verify", "cross-check the diagram formulas against the Weyl oracle");
  c_verify->add_option("--space,-s", space_text,
                       "restrict to one family or space");
  c_verify->add_option("--n", n, "n of the family");
  c_verify->add_option("--k", k, "k of the family");
  c_verify->add_option("--max-letters", max_letters,
                       "skip spaces with more letters (default 10)");
  c_verify->add_option("--threads", threads, "worker threads (0 = hardware)");
  c_verify->add_flag("--json", as_json, "emit JSON");

  CLI::App* c_batch = app.add_subcommand(
      "batch", "read JSON requests from stdin, one per line");
  (void)c_batch;

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("qdeg");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_batch->parsed()) return run_batch(in, out);
    if (c_verify->parsed()) {
      std::vector<verify_report> reports;
      json j = do_verify(verify_targets(space_text, n, k, max_letters),
                         threads, max_letters, reports);
      long long pairs = 0, mismatches = 0;
      for (const verify_report& rep : reports) {
        pairs += rep.pairs;
        mismatches += rep.mismatches;
        if (!as_json)
          out << rep.space_name << ": pairs=" << rep.pairs
              << " mismatches=" << rep.mismatches << " (" << rep.millis
              << " ms)\n";
        for (const std::string& s : rep.first_mismatches)
          err << rep.space_name << " mismatch: " << s << "\n";
      }
      if (as_json)
        out << j.dump() << "\n";
      else
        out << reports.size() << " spaces, " << pairs << " pairs, "
            << mismatches << " mismatches\n";
      return mismatches == 0 ? 0 : 4;
    }

    const space sp = resolve_space(space_text, n, k);
    json j;
    degree_answer ans;
    if (c_convert->parsed()) {
      j = do_convert(sp, parse_model(from_text), parse_model(to_text),
                     payload);
    } else if (c_nbhd->parsed()) {
      j = do_nbhd(sp, resolve_model(model_text, sp), payload, degree);
    } else if (c_mindeg->parsed()) {
      j = do_mindeg(sp, resolve_model(model_text, sp), lambda_text, mu_text,
                    ans);
    } else if (c_diagram->parsed()) {
      j = do_diagram(sp, resolve_model(model_text, sp), payload);
    } else {
      throw internal_error("no subcommand dispatched");
    }
    if (as_json) {
      out << j.dump() << "\n";
    } else if (c_mindeg->parsed()) {
      const model nat = native_model(sp);
      parts lam0 = convert(resolve_model(model_text, sp), nat,
                           parse_payload(resolve_model(model_text, sp),
                                         lambda_text, sp),
                           sp);
      print_mindeg(out, ans, lam0, diagrams);
    } else if (c_diagram->parsed()) {
      out << j["result"].get<std::string>();
    } else {
      out << j["result"].get<std::string>() << "\n";
    }
    return 0;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const model_error& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace schub

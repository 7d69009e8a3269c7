// Command line front end: compute invariants for explicit group specs,
// sweep parameterized families into tables, run the self-verification
// suites, or dump a full subgroup lattice as JSON.
//
// Exit codes: 0 success, 1 cross-method disagreement or verification
// failure, 2 bad spec or arguments, 3 capacity limit hit, 4 output I/O
// failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cyclofact/report.hpp"
#include "cyclofact/verify.hpp"

namespace {

using namespace cyclofact;

struct CommonFlags {
  std::vector<std::string> quantities;
  std::vector<std::string> methods;
  std::string format = "text";
  unsigned budget = 2048;
  unsigned jobs = 1;
  bool no_header = false;
  std::string output;
};

void attach_common(CLI::App* cmd, CommonFlags& f, bool with_methods = true) {
  cmd->add_option("-q,--quantities", f.quantities,
                  "Quantities to compute: cf2, f2, sd, csd (default all)")
      ->delimiter(',');
  if (with_methods)
    cmd->add_option("-m,--methods", f.methods,
                    "Engines to run: bruteforce, mobius, formula "
                    "(default all)")
        ->delimiter(',');
  cmd->add_option("--format", f.format, "Output format: text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_option("--budget", f.budget,
                  "Largest group order that will be built");
  cmd->add_option("--jobs", f.jobs,
                  "Worker threads for the permutability matrix "
                  "(0 = all cores)");
  cmd->add_flag("--no-header", f.no_header,
                "Suppress the CSV header line and the text preamble");
  cmd->add_option("-o,--output", f.output,
                  "Write to this file instead of standard output");
}

Quantities parse_quantities(const std::vector<std::string>& qs) {
  if (qs.empty()) return {};
  Quantities q{false, false, false, false};
  for (const std::string& s : qs) {
    if (s == "cf2")
      q.cf2 = true;
    else if (s == "f2")
      q.f2 = true;
    else if (s == "sd")
      q.sd = true;
    else if (s == "csd")
      q.csd = true;
    else
      throw ValidationError("unknown quantity: " + s);
  }
  return q;
}

Methods parse_methods(const std::vector<std::string>& ms) {
  if (ms.empty()) return {};
  Methods m{false, false, false};
  for (const std::string& s : ms) {
    if (s == "bruteforce")
      m.bruteforce = true;
    else if (s == "mobius")
      m.mobius = true;
    else if (s == "formula")
      m.formula = true;
    else
      throw ValidationError("unknown method: " + s);
  }
  return m;
}

// Stream that is either stdout or a file the caller asked for.
struct Sink {
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file = std::make_unique<std::ofstream>(path);
    if (!*file) throw IoError("cannot open " + path + " for writing");
  }
  std::ostream& out() { return file ? *file : std::cout; }
  void finish(const std::string& path) {
    out().flush();
    if (file && !*file) throw IoError("error while writing " + path);
    if (!file && !std::cout) throw IoError("error while writing output");
  }
  std::unique_ptr<std::ofstream> file;
};

void emit_records(const std::vector<OutputRecord>& records,
                  const CommonFlags& f, bool& any_mismatch) {
  Sink sink(f.output);
  std::ostream& os = sink.out();

  if (f.format == "csv") {
    if (!f.no_header) os << csv_header() << "\n";
    for (const OutputRecord& r : records) os << to_csv(r) << "\n";
  } else if (f.format == "json") {
    for (const OutputRecord& r : records) os << to_json(r) << "\n";
  } else {
    if (!f.no_header) {
      auto now = std::chrono::system_clock::now();
      std::time_t t = std::chrono::system_clock::to_time_t(now);
      char buf[64];
      std::strftime(buf, sizeof buf, "%F %T", std::gmtime(&t));
      os << "# cyclofact 0.1.0, " << buf << " UTC\n";
    }
    for (const OutputRecord& r : records) os << to_text(r);
  }
  for (const OutputRecord& r : records)
    if (!r.ok) any_mismatch = true;
  sink.finish(f.output);
}

int run(int argc, char** argv) {
  CLI::App app{"Exact cyclic factorization numbers, factorization numbers "
               "and subgroup commutativity degrees of finite groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cyclofact 0.1.0");

  // compute
  auto* compute = app.add_subcommand(
      "compute", "Invariants for one or more group specs");
  std::vector<std::string> specs;
  compute->add_option("spec", specs, "Group specs, e.g. dihedral:6")
      ->required();
  CommonFlags cf;
  attach_common(compute, cf);

  // table
  auto* table = app.add_subcommand(
      "table", "Sweep one family over an inclusive parameter range");
  std::string family;
  long long lo = 0, hi = 0;
  table->add_option("family", family,
                    "cyclic, dihedral, quaternion, semidihedral, modular<p>, "
                    "dicyclic, symmetric or alternating")
      ->required();
  table->add_option("lo", lo, "First parameter value")->required();
  table->add_option("hi", hi, "Last parameter value")->required();
  CommonFlags tf;
  attach_common(table, tf);

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Run the formula and identity verification sweeps");
  std::vector<std::string> scopes;
  verify->add_option("--scope", scopes,
                     "Scopes to run (default all); repeatable")
      ->delimiter(',');
  VerifyOptions vopts;
  verify->add_option("--budget", vopts.budget,
                     "Largest group order swept inside each scope");
  verify->add_option("--jobs", vopts.jobs,
                     "Worker threads (0 = all cores)");
  bool list_scopes = false;
  verify->add_flag("--list", list_scopes, "List scope names and exit");

  // dump-lattice
  auto* dump = app.add_subcommand(
      "dump-lattice",
      "Emit subgroups, inclusions and Moebius values as JSON");
  std::string dump_spec;
  dump->add_option("spec", dump_spec, "Group spec")->required();
  CommonFlags df;
  dump->add_option("--budget", df.budget,
                   "Largest group order that will be built");
  dump->add_option("-o,--output", df.output,
                   "Write to this file instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  bool any_mismatch = false;
  if (*compute) {
    Quantities q = parse_quantities(cf.quantities);
    Methods m = parse_methods(cf.methods);
    GroupConfig gcfg;
    gcfg.max_order = cf.budget;
    CountingOptions copts{cf.jobs};
    std::vector<OutputRecord> records;
    for (const std::string& s : specs)
      records.push_back(compute_record(parse_group_spec(s), q, m, gcfg,
                                       copts));
    emit_records(records, cf, any_mismatch);
  } else if (*table) {
    Quantities q = parse_quantities(tf.quantities);
    Methods m = parse_methods(tf.methods);
    GroupConfig gcfg;
    gcfg.max_order = tf.budget;
    CountingOptions copts{tf.jobs};
    emit_records(table_records(family, lo, hi, q, m, gcfg, copts), tf,
                 any_mismatch);
  } else if (*verify) {
    if (list_scopes) {
      for (const std::string& s : verify_scopes()) std::cout << s << "\n";
      return 0;
    }
    auto results = run_verify(scopes, vopts);
    unsigned failed = 0;
    for (const VerifyResult& r : results) {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.scope << ": "
                << r.name;
      if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
      std::cout << "\n";
      if (!r.pass) ++failed;
    }
    std::cout << results.size() << " checks, " << failed << " failed\n";
    if (failed) any_mismatch = true;
  } else if (*dump) {
    GroupConfig gcfg;
    gcfg.max_order = df.budget;
    Sink sink(df.output);
    sink.out() << lattice_dump_json(parse_group_spec(dump_spec), gcfg)
               << "\n";
    sink.finish(df.output);
  }
  return any_mismatch ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

// Copyright 2026 The cattcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "catt/cli.h"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "catt/error.h"
#include "catt/frontend.h"
#include "catt/kernel.h"
#include "catt/pasting.h"

namespace catt {
namespace {

struct Options {
  std::vector<std::string> files;
  std::string prelude;
  std::string ps_table;
  int max_errors = 1;
  bool verbose = false;
};

class Driver {
 public:
  Driver(const Options& opts, std::ostream& out, std::ostream& err)
      : opts_(opts), out_(out), err_(err) {}

  // False on an I/O error.
  bool check_file(const std::string& path, bool quiet) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      err_ << "cattcheck: cannot read " << path << "\n";
      return false;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();

    std::vector<SurfaceDecl> decls;
    try {
      decls = parse(text);
    } catch (const CattError& e) {
      report(path, e);
      return true;
    }
    for (const SurfaceDecl& d : decls) {
      if (stopped()) return true;
      try {
        const Declaration& checked = process_decl(env_, d);
        if (!quiet) print_checked(checked);
      } catch (const CattError& e) {
        report(path, e);
      }
    }
    return true;
  }

  // False if the table cannot be produced.
  bool print_ps_table(const std::string& name) {
    if (!Ident::is_valid(name) || !env_.contains(Ident(name))) {
      err_ << "cattcheck: --ps-table: no declaration named " << name << "\n";
      return false;
    }
    const Declaration& d = *env_.find(Ident(name));
    std::optional<PsContext> ps;
    if (const auto* c = std::get_if<CoherenceDecl>(&d)) {
      ps = c->ps;
    } else {
      try {
        ps = check_ps(std::get<LetDef>(d).ctx);
      } catch (const CattError& e) {
        err_ << "cattcheck: --ps-table: " << e.message() << "\n";
        return false;
      }
    }
    const DimTable& t = dim_table(*ps);
    out_ << "top:";
    for (int v : t.top) out_ << " " << v;
    out_ << " / glue:";
    for (int v : t.glue) out_ << " " << v;
    out_ << "\n";
    return true;
  }

  int errors() const { return errors_; }

 private:
  bool stopped() const {
    return opts_.max_errors > 0 && errors_ >= opts_.max_errors;
  }

  void print_checked(const Declaration& d) {
    if (const auto* c = std::get_if<CoherenceDecl>(&d)) {
      out_ << "checked " << c->coh->name() << " : " << c->coh->ty() << "\n";
      if (opts_.verbose) {
        out_ << "  rule: " << kind_name(c->coh->kind()) << "\n";
        out_ << "  context: " << c->coh->ctx() << "\n";
        out_ << "  type: " << pretty_explicit(c->coh->ty()) << "\n";
      }
      return;
    }
    const auto& l = std::get<LetDef>(d);
    out_ << "checked " << l.name << " : " << l.ty << "\n";
    if (opts_.verbose) {
      out_ << "  context: " << l.ctx << "\n";
      out_ << "  body: " << pretty_explicit(l.body) << "\n";
      out_ << "  type: " << pretty_explicit(l.ty) << "\n";
    }
  }

  void report(const std::string& path, const CattError& e) {
    ++errors_;
    SourceLoc loc = e.loc().value_or(SourceLoc{1, 1});
    err_ << path << ":" << loc.line << ":" << loc.col << ": error["
         << code_name(e.code()) << "]: " << e.message() << "\n";
    const auto& frames = e.judgments();
    for (auto it = frames.rbegin(); it != frames.rend(); ++it)
      err_ << "  in rule " << it->rule << ": " << it->premise << "\n";
  }

  const Options& opts_;
  std::ostream& out_;
  std::ostream& err_;
  Environment env_;
  int errors_ = 0;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  Options opts;
  CLI::App app{"Checks CaTT definition files.", "cattcheck"};
  app.add_option("files", opts.files, "Files to check, in order")
      ->required();
  app.add_flag("--verbose", opts.verbose,
               "Print the elaborated full substitutions");
  app.add_option("--ps-table", opts.ps_table,
                 "Print the table of dimensions of a declaration's context");
  app.add_option("--max-errors", opts.max_errors,
                 "Stop after this many errors (0: never)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--prelude", opts.prelude,
                 "Load this file into the environment first");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Driver driver(opts, out, err);
  if (!opts.prelude.empty() && !driver.check_file(opts.prelude, true))
    return kExitUsage;
  for (const std::string& f : opts.files)
    if (!driver.check_file(f, false)) return kExitUsage;
  if (!opts.ps_table.empty() && !driver.print_ps_table(opts.ps_table))
    return driver.errors() > 0 ? kExitCheckFailed : kExitUsage;
  return driver.errors() > 0 ? kExitCheckFailed : kExitOk;
}

}  // namespace catt

// Command-line driver: batch evaluation from a script, a file, or stdin, and
// an interactive REPL. Exit codes: 0 on success, 1 for usage/parse/decode
// errors, 2 when an evaluation hit the step limit.

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lam/church.hpp"
#include "lam/parser.hpp"
#include "lam/reduce.hpp"
#include "lam/trace_io.hpp"

namespace {

using namespace lam;

// Usage and parse errors (1) outrank step limits (2), which outrank success.
int worst(int a, int b) {
  if (a == 1 || b == 1) return 1;
  return a > b ? a : b;
}

std::string trim(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '\'' || c == '_';
}

struct Session {
  Environment env;
  std::set<Name> user_names;  // names the user bound, as opposed to the prelude
  std::size_t max_steps = kDefaultMaxSteps;
  std::string decode_mode;  // "", "nat" or "bool"
  std::string trace_mode;   // "", "text", "json" or "dot"
  RenderOptions render;

  std::string show(const TermPtr& t) const {
    return pretty_print(render.canon ? canonicalize(t) : t, render.sugar);
  }

  int report(const std::exception& e) const {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  int decode_and_print(const TermPtr& t) const {
    if (decode_mode == "nat") {
      auto decoded = decode_nat(t, max_steps);
      if (!decoded.ok()) {
        std::cerr << "error: decode: " << decode_error_name(*decoded.error) << "\n";
        return *decoded.error == DecodeError::StepLimit ? 2 : 1;
      }
      std::cout << *decoded << "\n";
    } else if (decode_mode == "bool") {
      auto decoded = decode_bool(t, max_steps);
      if (!decoded.ok()) {
        std::cerr << "error: decode: " << decode_error_name(*decoded.error) << "\n";
        return *decoded.error == DecodeError::StepLimit ? 2 : 1;
      }
      std::cout << (*decoded ? "true" : "false") << "\n";
    }
    return 0;
  }

  // Evaluate one expression and print according to the current modes.
  int eval(const std::string& text) {
    TermPtr term;
    try {
      term = parse_term(text, env);
    } catch (const ParseError& e) {
      return report(e);
    }
    return eval_term(term);
  }

  int eval_term(const TermPtr& term) {
    int code = 0;
    TermPtr result;
    bool normal = false;
    if (!trace_mode.empty()) {
      Trace tr = trace(term, max_steps);
      if (trace_mode == "text") std::cout << render_text(tr, render);
      if (trace_mode == "json") std::cout << render_json(tr, render);
      if (trace_mode == "dot") std::cout << render_dot(tr, render);
      normal = reached_normal_form(tr.outcome);
      result = outcome_term(tr.outcome);
    } else {
      ReduceOutcome out = normalize(term, max_steps);
      normal = reached_normal_form(out);
      result = outcome_term(out);
      std::cout << show(result) << "\n";
      if (!normal) {
        std::cerr << "error: step limit " << max_steps << " reached\n";
      }
    }
    if (!normal) code = 2;
    if (normal && !decode_mode.empty()) code = worst(code, decode_and_print(result));
    return code;
  }

  // Bind the definitions of a `let` statement (or a whole definitions file).
  int bind_program(const std::string& text) {
    try {
      Program program = parse_program(text, env);
      for (auto& [name, value] : program.bindings) {
        env.bind(name, value);
        user_names.insert(name);
      }
      if (program.last) return eval_term(program.last);
    } catch (const std::exception& e) {
      return report(e);
    }
    return 0;
  }

  bool starts_let(const std::string& line) const {
    return line.size() >= 3 && line.compare(0, 3, "let") == 0 &&
           (line.size() == 3 || !is_word_char(line[3]));
  }

  // One line of batch input: blank lines and comments are skipped, `let`
  // lines extend the environment, anything else is evaluated.
  int batch_line(const std::string& raw) {
    std::string line = trim(raw);
    if (line.empty() || line.compare(0, 2, "--") == 0) return 0;
    if (starts_let(line)) return bind_program(line);
    return eval(line);
  }

  int run_batch(std::istream& in) {
    int code = 0;
    std::string line;
    while (std::getline(in, line)) code = worst(code, batch_line(line));
    return code;
  }
};

// ---- REPL ----------------------------------------------------------------

void repl_help() {
  std::cout << "commands:\n"
               "  :let NAME = EXPR   bind a closed term to NAME\n"
               "  :trace MODE        text, json, dot, or off\n"
               "  :steps N           set the reduction budget\n"
               "  :decode MODE       nat, bool, or off\n"
               "  :load PATH         load definitions from a file\n"
               "  :dump-prelude      print the preloaded definitions\n"
               "  :quit              leave\n";
}

struct Repl {
  Session& session;

  void let_command(const std::string& args) {
    std::size_t eq = args.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: usage: :let NAME = EXPR\n";
      return;
    }
    std::string name = trim(args.substr(0, eq));
    std::string body = trim(args.substr(eq + 1));
    if (!body.empty() && body.back() == ';') body.pop_back();
    try {
      std::vector<Token> name_tokens = tokenize(name);
      if (name_tokens.size() != 1 || name_tokens[0].kind != TokenKind::Ref) {
        std::cerr << "error: '" << name << "' is not a valid definition name\n";
        return;
      }
      if (session.env.contains(name) && !session.user_names.count(name)) {
        std::cerr << "error: '" << name << "' is a prelude name and cannot be redefined\n";
        return;
      }
      TermPtr value = parse_term(body, session.env);
      auto free = free_vars(value);
      if (!free.empty()) {
        std::cerr << "error: definition of '" << name << "' has free variables\n";
        return;
      }
      if (session.user_names.count(name)) session.env.unbind(name);
      session.env.bind(name, value);
      session.user_names.insert(name);
      std::cout << name << " = " << session.show(value) << "\n";
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
    }
  }

  void load_command(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "error: cannot open '" << path << "'\n";
      return;
    }
    std::ostringstream content;
    content << in.rdbuf();
    try {
      Program program = parse_program(content.str(), session.env);
      for (auto& [name, value] : program.bindings) {
        session.env.bind(name, value);
        session.user_names.insert(name);
      }
      std::cout << "loaded " << program.bindings.size() << " definitions from " << path << "\n";
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
    }
  }

  // Returns false when the session should end.
  bool command(const std::string& line) {
    std::size_t space = line.find_first_of(" \t");
    std::string name = space == std::string::npos ? line : line.substr(0, space);
    std::string args = space == std::string::npos ? "" : trim(line.substr(space + 1));
    if (name == ":quit" || name == ":q") return false;
    if (name == ":help") {
      repl_help();
    } else if (name == ":let") {
      let_command(args);
    } else if (name == ":trace") {
      if (args == "text" || args == "json" || args == "dot") {
        session.trace_mode = args;
      } else if (args == "off") {
        session.trace_mode.clear();
      } else {
        std::cerr << "error: usage: :trace text|json|dot|off\n";
      }
    } else if (name == ":steps") {
      try {
        session.max_steps = std::stoul(args);
      } catch (const std::exception&) {
        std::cerr << "error: usage: :steps N\n";
      }
    } else if (name == ":decode") {
      if (args == "nat" || args == "bool") {
        session.decode_mode = args;
      } else if (args == "off") {
        session.decode_mode.clear();
      } else {
        std::cerr << "error: usage: :decode nat|bool|off\n";
      }
    } else if (name == ":load") {
      if (args.empty()) {
        std::cerr << "error: usage: :load PATH\n";
      } else {
        load_command(args);
      }
    } else if (name == ":dump-prelude") {
      std::cout << prelude_text();
    } else {
      std::cerr << "error: unknown command '" << name << "' (try :help)\n";
    }
    return true;
  }

  int run() {
    bool tty = isatty(fileno(stdin));
    std::string raw;
    for (;;) {
      if (tty) std::cout << "λ> " << std::flush;
      if (!std::getline(std::cin, raw)) break;
      std::string line = trim(raw);
      if (line.empty() || line.compare(0, 2, "--") == 0) continue;
      if (line[0] == ':') {
        if (!command(line)) break;
        continue;
      }
      // Errors are reported and the session keeps going.
      session.batch_line(line);
    }
    return 0;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"normal-order λ-calculus interpreter"};
  app.get_formatter()->column_width(28);

  std::string file;
  std::string expr;
  Session session;
  bool no_prelude = false;
  bool no_sugar = false;
  bool want_repl = false;
  bool dump_prelude = false;

  app.add_option("file", file, "script of definitions and expressions to run");
  app.add_option("-e,--expr", expr, "evaluate one expression and exit")->excludes("file");
  app.add_option("--max-steps", session.max_steps, "β-reduction budget per expression")
      ->capture_default_str();
  app.add_option("--decode", session.decode_mode, "read the normal form back as a value")
      ->check(CLI::IsMember({"nat", "bool"}));
  app.add_option("--trace", session.trace_mode, "print every reduction step")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_flag("--no-prelude", no_prelude, "start with an empty environment");
  app.add_flag("--canon", session.render.canon, "canonicalize binder names in output");
  app.add_flag("--no-sugar", no_sugar, "print one binder per λ");
  app.add_flag("--repl", want_repl, "force an interactive session");
  app.add_flag("--dump-prelude", dump_prelude, "print the preloaded definitions and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  session.render.sugar = !no_sugar;
  if (!no_prelude) session.env = builtin_env();

  if (dump_prelude) {
    std::cout << prelude_text();
    return 0;
  }
  if (!expr.empty()) return session.eval(expr);
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "error: cannot open '" << file << "'\n";
      return 1;
    }
    return session.run_batch(in);
  }
  if (want_repl || isatty(fileno(stdin))) return Repl{session}.run();
  return session.run_batch(std::cin);
}

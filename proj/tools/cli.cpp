#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "conjugacy/expr.hpp"
#include "conjugacy/oracle.hpp"
#include "conjugacy/snf.hpp"
#include "conjugacy/witness.hpp"
#include "conjugacy/words.hpp"

namespace conjugacy::cli {

namespace {

using json = nlohmann::json;
using witness::WitnessSet;
using words::Side;
using words::Word;
using words::WordPair;

constexpr const char* kEnvSnfLimit = "CONJUGACY_MAX_SNF_SIZE";

std::string show_word(const Word& w) { return w.empty() ? "(empty)" : w.str(); }

std::string show_pair(const WordPair& p) { return "(" + p.u.str() + ", " + p.v.str() + ")"; }

json witness_set_json(const WitnessSet& ws) {
    switch (ws.kind()) {
    case WitnessSet::Kind::empty:
        return json{{"kind", "empty"}};
    case WitnessSet::Kind::universal:
        return json{{"kind", "universal"}};
    case WitnessSet::Kind::unique:
        return json{{"kind", "unique"},
                    {"word", ws.unique_word().str()},
                    {"inner", ws.unique_inner()},
                    {"outer", ws.unique_outer()}};
    case WitnessSet::Kind::all_of:
        return json{{"kind", "allOf"}, {"root", {ws.root().u.str(), ws.root().v.str()}}};
    }
    return json{};
}

std::string family_text(const WordPair& root, Side side) {
    // One term per cut: (xy)*x for inner, (yx)*y for outer.
    std::string out;
    for (const words::Cut& c : words::cuts(root.u, root.v)) {
        const Word rep = side == Side::inner ? c.x + c.y : c.y + c.x;
        const Word tail = side == Side::inner ? c.x : c.y;
        if (!out.empty()) out += " + ";
        out += "(" + rep.str() + ")*" + tail.str();
    }
    return out;
}

std::string witness_set_text(const WitnessSet& ws) {
    switch (ws.kind()) {
    case WitnessSet::Kind::empty:
        return "none";
    case WitnessSet::Kind::universal:
        return "universal (every word, both sides)";
    case WitnessSet::Kind::unique: {
        std::string sides;
        if (ws.unique_inner()) sides += "inner";
        if (ws.unique_outer()) sides += sides.empty() ? "outer" : ", outer";
        return "unique \"" + ws.unique_word().str() + "\" (" + sides + ")";
    }
    case WitnessSet::Kind::all_of:
        return "all of root (" + ws.root().u.str() + "," + ws.root().v.str() +
               "): inner " + family_text(ws.root(), Side::inner) + ", outer " +
               family_text(ws.root(), Side::outer);
    }
    return "";
}

std::size_t snf_limit_from_env(std::ostream& err, bool& ok) {
    ok = true;
    const char* env = std::getenv(kEnvSnfLimit);
    if (env == nullptr || *env == '\0') return expr::kDefaultSnfSizeLimit;
    std::string s(env);
    if (!std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
        err << "conjugacy: invalid " << kEnvSnfLimit << " value '" << s << "'\n";
        ok = false;
        return expr::kDefaultSnfSizeLimit;
    }
    return static_cast<std::size_t>(std::stoull(s));
}

struct CheckArgs {
    std::string expr_text;
    std::string file;
    bool json_out = false;
    bool counterexample = false;
    std::size_t max_snf_size = 0;
};

struct WitnessArgs {
    std::string expr_text;
    bool json_out = false;
    std::size_t enumerate_len = 0;
    bool enumerate_given = false;
};

struct SnfArgs {
    std::string expr_text;
    bool json_out = false;
};

struct OracleArgs {
    std::string expr_text;
    bool json_out = false;
    std::size_t unroll = 4;
    std::size_t max_len = 64;
    std::size_t witness_len = 16;
};

struct WordArgs {
    std::string op;
    std::vector<std::string> rest;
};

int run_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
    std::string text = a.expr_text;
    if (!a.file.empty()) {
        std::ifstream f(a.file);
        if (!f) {
            err << "conjugacy: cannot read file '" << a.file << "'\n";
            return 2;
        }
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    }
    witness::DecideOptions opts;
    opts.snf_size_limit = a.max_snf_size;
    opts.find_counterexample = a.counterexample;
    witness::ConjugacyReport rep = witness::decide(expr::parse(text), opts);

    if (a.json_out) {
        json summands = json::array();
        for (const witness::SummandReport& s : rep.summands) {
            json cx;
            if (s.counterexample) {
                cx = json::array({s.counterexample->u.str(), s.counterexample->v.str()});
            } else {
                cx = nullptr;
            }
            summands.push_back(json{{"expression", s.expression},
                                    {"conjugate", s.conjugate},
                                    {"witnesses", witness_set_json(s.witnesses)},
                                    {"counterexample", cx}});
        }
        out << json{{"schema", 1}, {"conjugate", rep.conjugate}, {"summands", summands}}.dump()
            << "\n";
    } else if (rep.conjugate) {
        out << "conjugate\n";
    } else {
        const witness::SummandReport* bad = nullptr;
        for (const witness::SummandReport& s : rep.summands) {
            if (!s.conjugate) {
                bad = &s;
                break;
            }
        }
        if (bad != nullptr && bad->counterexample) {
            out << "not conjugate: " << show_pair(*bad->counterexample) << "\n";
        } else {
            out << "not conjugate\n";
        }
    }
    return rep.conjugate ? 0 : 1;
}

int run_witness(const WitnessArgs& a, std::size_t snf_limit, std::ostream& out) {
    witness::DecideOptions opts;
    opts.snf_size_limit = snf_limit;
    witness::ConjugacyReport rep = witness::decide(expr::parse(a.expr_text), opts);

    if (a.json_out) {
        json summands = json::array();
        for (const witness::SummandReport& s : rep.summands) {
            json entry{{"expression", s.expression},
                       {"conjugate", s.conjugate},
                       {"witnesses", witness_set_json(s.witnesses)}};
            if (a.enumerate_given) {
                if (s.witnesses.kind() == WitnessSet::Kind::universal) {
                    entry["enumerated"] = nullptr;
                } else {
                    json inner = json::array(), outer = json::array();
                    for (const Word& w :
                         witness::enumerate_witnesses(s.witnesses, Side::inner, a.enumerate_len))
                        inner.push_back(w.str());
                    for (const Word& w :
                         witness::enumerate_witnesses(s.witnesses, Side::outer, a.enumerate_len))
                        outer.push_back(w.str());
                    entry["enumerated"] = json{{"inner", inner}, {"outer", outer}};
                }
            }
            summands.push_back(std::move(entry));
        }
        out << json{{"schema", 1}, {"conjugate", rep.conjugate}, {"summands", summands}}.dump()
            << "\n";
    } else {
        for (const witness::SummandReport& s : rep.summands) {
            out << s.expression << ": " << witness_set_text(s.witnesses) << "\n";
            if (a.enumerate_given && s.witnesses.kind() != WitnessSet::Kind::universal) {
                for (Side side : {Side::inner, Side::outer}) {
                    out << (side == Side::inner ? "  inner <= " : "  outer <= ")
                        << a.enumerate_len << ":";
                    for (const Word& w :
                         witness::enumerate_witnesses(s.witnesses, side, a.enumerate_len)) {
                        out << " " << show_word(w);
                    }
                    out << "\n";
                }
            }
        }
        if (rep.summands.empty()) out << "empty language\n";
    }
    return rep.conjugate ? 0 : 1;
}

int run_snf(const SnfArgs& a, std::size_t snf_limit, std::ostream& out) {
    expr::SnfResult snf = expr::to_snf(expr::parse(a.expr_text), snf_limit);
    if (a.json_out) {
        json summands = json::array();
        for (const expr::SumfreeMonomial& m : snf.summands)
            summands.push_back(expr::render_monomial(m));
        out << json{{"schema", 1},
                    {"summands", summands},
                    {"input_size", snf.input_size},
                    {"output_size", snf.output_size}}
                   .dump()
            << "\n";
    } else if (snf.summands.empty()) {
        out << "0\n";
    } else {
        for (const expr::SumfreeMonomial& m : snf.summands) out << expr::render_monomial(m) << "\n";
    }
    return 0;
}

int run_oracle(const OracleArgs& a, std::ostream& out) {
    oracle::EnumBounds bounds;
    bounds.max_unroll = a.unroll;
    bounds.max_len = a.max_len;
    oracle::OracleReport rep =
        oracle::cross_validate(expr::parse(a.expr_text), bounds, a.witness_len);

    if (a.json_out) {
        json cx = rep.counterexample
                      ? json::array({rep.counterexample->u.str(), rep.counterexample->v.str()})
                      : json(nullptr);
        json inner = json::array(), outer = json::array();
        for (const Word& w : rep.inner_witnesses) inner.push_back(w.str());
        for (const Word& w : rep.outer_witnesses) outer.push_back(w.str());
        out << json{{"schema", 1},
                    {"pairs_checked", rep.pairs_checked},
                    {"truncated", rep.truncated},
                    {"verdict", rep.counterexample ? "counterexample" : "all-conjugate"},
                    {"counterexample", cx},
                    {"witnesses",
                     {{"inner", inner}, {"outer", outer}, {"unconstrained", rep.witnesses_unconstrained}}}}
                   .dump()
            << "\n";
    } else {
        out << "pairs checked: " << rep.pairs_checked << "\n";
        out << "truncated: " << (rep.truncated ? "yes" : "no") << "\n";
        if (rep.counterexample) {
            out << "verdict: counterexample " << show_pair(*rep.counterexample) << "\n";
        } else {
            out << "verdict: all conjugate\n";
            if (rep.witnesses_unconstrained) {
                out << "witnesses: every word (all pairs are (epsilon, epsilon))\n";
            } else {
                for (Side side : {Side::inner, Side::outer}) {
                    const auto& ws = side == Side::inner ? rep.inner_witnesses : rep.outer_witnesses;
                    out << (side == Side::inner ? "inner" : "outer") << " witnesses <= "
                        << a.witness_len << ":";
                    for (const Word& w : ws) out << " " << show_word(w);
                    out << "\n";
                }
            }
        }
    }
    return rep.counterexample ? 1 : 0;
}

int run_word(const WordArgs& a, std::ostream& out, std::ostream& err) {
    auto need = [&](std::size_t n) {
        if (a.rest.size() != n) {
            err << "conjugacy: word " << a.op << " expects " << n << " word argument"
                << (n == 1 ? "" : "s") << "\n";
            return false;
        }
        return true;
    };
    if (a.op == "root") {
        if (!need(1)) return 2;
        words::PrimitiveRoot r = words::primitive_root(Word(a.rest[0]));
        out << r.root.str() << "^" << r.exponent << "\n";
        return 0;
    }
    if (a.op == "conjugate") {
        if (!need(2)) return 2;
        const bool conj = words::is_conjugate(Word(a.rest[0]), Word(a.rest[1]));
        out << (conj ? "conjugate" : "not conjugate") << "\n";
        return conj ? 0 : 1;
    }
    if (a.op == "cuts") {
        if (!need(2)) return 2;
        std::vector<words::Cut> cs = words::cuts(Word(a.rest[0]), Word(a.rest[1]));
        for (const words::Cut& c : cs) out << "(" << c.x.str() << "," << c.y.str() << ")\n";
        return cs.empty() ? 1 : 0;
    }
    if (a.op == "delay") {
        if (!need(2)) return 2;
        Word u(a.rest[0]), v(a.rest[1]);
        std::optional<Word> p = words::prefix_delay(u, v);
        std::optional<Word> s = words::suffix_delay(u, v);
        out << "prefix: " << (p ? show_word(*p) : "none") << "\n";
        out << "suffix: " << (s ? show_word(*s) : "none") << "\n";
        return 0;
    }
    err << "conjugacy: unknown word operation '" << a.op
        << "' (expected root, conjugate, cuts or delay)\n";
    return 2;
}

} // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    (void)in;
    bool env_ok = true;
    const std::size_t env_limit = snf_limit_from_env(err, env_ok);
    if (!env_ok) return 2;

    CLI::App app{"decides whether a rational relation over word pairs is conjugate"};
    app.name("conjugacy");
    app.require_subcommand(1);

    CheckArgs check_args;
    check_args.max_snf_size = env_limit;
    CLI::App* check = app.add_subcommand("check", "decide conjugacy of an expression");
    CLI::Option* check_expr = check->add_option("expr", check_args.expr_text, "rational expression");
    CLI::Option* check_file =
        check->add_option("-f,--file", check_args.file, "read the expression from a file");
    check_expr->excludes(check_file);
    check->add_flag("--json", check_args.json_out, "machine-readable output");
    check->add_flag("--counterexample", check_args.counterexample,
                    "search for a non-conjugate pair in failing summands");
    check->add_option("--max-snf-size", check_args.max_snf_size,
                      "node limit for the sumfree normal form");

    WitnessArgs witness_args;
    CLI::App* wit = app.add_subcommand("witness", "compute common-witness sets per summand");
    wit->add_option("expr", witness_args.expr_text, "rational expression")->required();
    wit->add_flag("--json", witness_args.json_out, "machine-readable output");
    CLI::Option* enum_opt = wit->add_option("--enumerate", witness_args.enumerate_len,
                                            "list witness words up to this length");

    SnfArgs snf_args;
    CLI::App* snf = app.add_subcommand("snf", "print the sumfree normal form");
    snf->add_option("expr", snf_args.expr_text, "rational expression")->required();
    snf->add_flag("--json", snf_args.json_out, "machine-readable output");

    OracleArgs oracle_args;
    CLI::App* orc = app.add_subcommand("oracle", "brute-force cross-validation");
    orc->add_option("expr", oracle_args.expr_text, "rational expression")->required();
    orc->add_option("--unroll", oracle_args.unroll, "star unroll bound");
    orc->add_option("--max-len", oracle_args.max_len, "word length cap");
    orc->add_option("--witness-len", oracle_args.witness_len, "witness length cap");
    orc->add_flag("--json", oracle_args.json_out, "machine-readable output");

    WordArgs word_args;
    CLI::App* word = app.add_subcommand("word", "word utilities: root, conjugate, cuts, delay");
    word->add_option("op", word_args.op, "root | conjugate | cuts | delay")->required();
    word->add_option("args", word_args.rest, "word arguments (may be empty strings)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(check)) {
            if (check_expr->count() == 0 && check_file->count() == 0) {
                err << "conjugacy: check needs an expression or -f FILE\n";
                return 2;
            }
            return run_check(check_args, out, err);
        }
        if (app.got_subcommand(wit)) {
            witness_args.enumerate_given = enum_opt->count() > 0;
            return run_witness(witness_args, env_limit, out);
        }
        if (app.got_subcommand(snf)) return run_snf(snf_args, env_limit, out);
        if (app.got_subcommand(orc)) return run_oracle(oracle_args, out);
        if (app.got_subcommand(word)) return run_word(word_args, out, err);
        err << "conjugacy: no subcommand\n";
        return 2;
    } catch (const expr::ParseError& e) {
        err << "conjugacy: " << e.what() << "\n";
        return 2;
    } catch (const expr::SnfLimitError& e) {
        err << "conjugacy: " << e.what() << "\n";
        return 2;
    } catch (const oracle::CrossValidationError& e) {
        err << "conjugacy: cross-validation failed: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "conjugacy: " << e.what() << "\n";
        return 2;
    }
}

} // namespace conjugacy::cli

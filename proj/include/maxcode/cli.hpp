#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "maxcode.hpp"

namespace maxcode::cli {

// Exit codes: 0 = yes / pass / converged, 1 = no / witness / cap reached,
// 2 = usage or input error.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

namespace detail {

inline std::string show_word(const Word& w) {
    return w.empty() ? std::string(1, kEpsilonGlyph) : w;
}

inline void emit(const std::string& text, const std::string& out_path,
                 std::ostream& out) {
    if (out_path.empty())
        out << text;
    else
        write_file(out_path, text);
}

inline std::string render_dfa(const Dfa& d) {
    std::ostringstream buf;
    write_dfa(buf, d);
    return buf.str();
}

inline std::string render_transducer(const Transducer& t) {
    std::ostringstream buf;
    write_transducer(buf, t);
    return buf.str();
}

inline std::string render_words(const std::vector<Word>& ws) {
    std::ostringstream buf;
    write_words(buf, ws);
    return buf.str();
}

// Flags shared by the subcommands that evaluate languages relative to a
// transducer and an optional universe.
struct LangArgs {
    std::string transducer_path;
    std::string lang_spec;
    std::string universe_spec;
    int universe_len = -1;
    int universe_maxlen = -1;
    int state_budget = kDefaultStateBudget;

    void add_transducer(CLI::App* cmd) {
        cmd->add_option("-t,--transducer", transducer_path,
                        "transducer file")
            ->required();
    }
    void add_lang(CLI::App* cmd) {
        cmd->add_option("-l,--lang", lang_spec,
                        "language (re:<regex>, words:<w1,w2,...> or "
                        "file:<path>)")
            ->required();
    }
    void add_universe(CLI::App* cmd) {
        auto* m = cmd->add_option("-m,--universe", universe_spec,
                                  "universe language (default: all words)");
        auto* ln = cmd->add_option("--universe-len", universe_len,
                                   "universe = all words of this length");
        auto* ml = cmd->add_option("--universe-maxlen", universe_maxlen,
                                   "universe = all words up to this length");
        m->excludes(ln)->excludes(ml);
        ln->excludes(ml);
    }
    void add_budget(CLI::App* cmd) {
        cmd->add_option("--state-budget", state_budget,
                        "cap on intermediate automaton sizes");
    }

    Transducer transducer() const {
        return load_transducer_file(transducer_path);
    }
    Nfa language(const Alphabet& alphabet) const {
        return lang_from_spec(lang_spec, alphabet);
    }
    Nfa universe(const Alphabet& alphabet) const {
        if (!universe_spec.empty())
            return lang_from_spec(universe_spec, alphabet);
        if (universe_len >= 0) return sigma_exact(alphabet, universe_len);
        if (universe_maxlen >= 0) return sigma_upto(alphabet, universe_maxlen);
        return sigma_star(alphabet);
    }
    PropertyInstance instance() const {
        Transducer t = transducer();
        Nfa m = universe(t.alphabet());
        return PropertyInstance(t, m, state_budget);
    }
};

}  // namespace detail

// Parses and executes one command. `args` excludes the program name.
// All output goes to the given streams, so identical invocations produce
// identical bytes.
inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
    using detail::LangArgs;

    CLI::App app{"code properties as transducers, and maximal embeddings "
                 "of independent regular languages"};
    app.name("maxcode");
    app.require_subcommand(1);
    int exit_code = kExitYes;

    // ---- build ----------------------------------------------------------
    auto* build = app.add_subcommand(
        "build", "construct a standard property transducer");
    struct {
        std::string kind;
        int k = -1;
        std::string alphabet;
        std::string out_path;
    } build_args;
    build->add_option("kind", build_args.kind,
                      "px | sx | bx | tsub K | dsub K | did2 | fig1")
        ->required()
        ->check(CLI::IsMember({"px", "sx", "bx", "tsub", "dsub", "did2",
                               "fig1"}));
    build->add_option("k", build_args.k, "error count for tsub/dsub");
    build->add_option("--alphabet", build_args.alphabet, "alphabet symbols")
        ->required();
    build->add_option("-o,--output", build_args.out_path, "output file");
    build->callback([&] {
        Alphabet alphabet(build_args.alphabet);
        const std::string& kind = build_args.kind;
        bool wants_k = kind == "tsub" || kind == "dsub";
        if (wants_k && build_args.k < 1)
            throw error(kind + " needs a positive error count");
        if (!wants_k && build_args.k != -1)
            throw error(kind + " does not take an error count");
        Transducer t = kind == "px"     ? make_prefix(alphabet)
                       : kind == "sx"   ? make_suffix(alphabet)
                       : kind == "bx"   ? make_bifix(alphabet)
                       : kind == "tsub" ? make_tsub(build_args.k, alphabet)
                       : kind == "dsub" ? make_dsub(build_args.k, alphabet)
                       : kind == "did2" ? make_did2(alphabet)
                                        : make_fig1(alphabet);
        detail::emit(detail::render_transducer(t), build_args.out_path, out);
    });

    // ---- op -------------------------------------------------------------
    auto* op = app.add_subcommand("op", "transducer algebra");
    op->require_subcommand(1);
    struct {
        std::string t_path, s_path, out_path;
        int exponent = 1;
    } op_args;
    auto add_op = [&](const std::string& name, const std::string& desc,
                      bool binary, bool takes_exponent, auto&& action) {
        auto* cmd = op->add_subcommand(name, desc);
        cmd->add_option("-t,--transducer", op_args.t_path, "transducer file")
            ->required();
        if (binary)
            cmd->add_option("-s,--second", op_args.s_path,
                            "second transducer file")
                ->required();
        if (takes_exponent)
            cmd->add_option("-n,--power", op_args.exponent, "exponent")
                ->required();
        cmd->add_option("-o,--output", op_args.out_path, "output file");
        cmd->callback([&, action] {
            Transducer result = action();
            detail::emit(detail::render_transducer(result), op_args.out_path,
                         out);
        });
    };
    add_op("invert", "swap input and output labels", false, false, [&] {
        return trim(invert(load_transducer_file(op_args.t_path)));
    });
    add_op("union", "union of two relations", true, false, [&] {
        return trim(t_union(load_transducer_file(op_args.t_path),
                            load_transducer_file(op_args.s_path)));
    });
    add_op("compose", "relational composition (second applied after first)",
           true, false, [&] {
               return compose(load_transducer_file(op_args.t_path),
                              load_transducer_file(op_args.s_path));
           });
    add_op("power", "n-fold self-composition", false, true, [&] {
        return power(load_transducer_file(op_args.t_path), op_args.exponent);
    });

    // ---- apply / ind / mu ----------------------------------------------
    LangArgs apply_args;
    std::string apply_out;
    int apply_enum = -1;
    auto* apply = app.add_subcommand(
        "apply", "image of a language under a transducer");
    apply_args.add_transducer(apply);
    apply_args.add_lang(apply);
    apply_args.add_budget(apply);
    apply->add_option("-o,--output", apply_out, "output file");
    apply->add_option("--enum", apply_enum,
                      "print accepted words up to this length instead of "
                      "an automaton");
    apply->callback([&] {
        Transducer t = apply_args.transducer();
        Nfa lang = apply_args.language(t.alphabet());
        Nfa image = apply_lang(t, lang);
        Dfa result = determinize_minimize(image, apply_args.state_budget);
        if (!apply_out.empty() || apply_enum < 0)
            detail::emit(detail::render_dfa(result), apply_out, out);
        if (apply_enum >= 0)
            out << detail::render_words(
                enumerate_upto(to_nfa(result), apply_enum,
                               apply_args.state_budget));
    });

    auto add_operator_cmd = [&](const std::string& name,
                                const std::string& desc, LangArgs& largs,
                                std::string& out_path, int& enum_len,
                                auto&& compute) {
        auto* cmd = app.add_subcommand(name, desc);
        largs.add_transducer(cmd);
        largs.add_lang(cmd);
        largs.add_universe(cmd);
        largs.add_budget(cmd);
        cmd->add_option("-o,--output", out_path, "output file");
        cmd->add_option("--enum", enum_len,
                        "print accepted words up to this length instead of "
                        "an automaton");
        cmd->callback([&, compute] {
            PropertyInstance p = largs.instance();
            Dfa result = compute(p, largs.language(p.alphabet()));
            if (!out_path.empty() || enum_len < 0)
                detail::emit(detail::render_dfa(result), out_path, out);
            if (enum_len >= 0)
                out << detail::render_words(enumerate_upto(
                    to_nfa(result), enum_len, largs.state_budget));
        });
    };
    LangArgs ind_args, mu_args;
    std::string ind_out, mu_out;
    int ind_enum = -1, mu_enum = -1;
    add_operator_cmd("ind", "universe words in or independent from L",
                     ind_args, ind_out, ind_enum,
                     [](const PropertyInstance& p, const Nfa& l) {
                         return ind(p, l);
                     });
    add_operator_cmd("mu", "one application of the max-min operator",
                     mu_args, mu_out, mu_enum,
                     [](const PropertyInstance& p, const Nfa& l) {
                         return mu(p, l);
                     });

    // ---- embed ----------------------------------------------------------
    LangArgs embed_args;
    struct {
        int max_iter = 64;
        int enum_len = -1;
        std::string trace_dir;
        std::string out_path;
    } embed_opts;
    auto* embed = app.add_subcommand(
        "embed", "iterate the max-min operator to a maximal embedding");
    embed_args.add_transducer(embed);
    embed_args.add_lang(embed);
    embed_args.add_universe(embed);
    embed_args.add_budget(embed);
    embed->add_option("--max-iter", embed_opts.max_iter, "iteration cap");
    embed->add_option("--trace", embed_opts.trace_dir,
                      "dump every iterate into this directory");
    embed->add_option("--enum", embed_opts.enum_len,
                      "print the final language as words up to this length");
    embed->add_option("-o,--output", embed_opts.out_path, "output file");
    embed->callback([&] {
        PropertyInstance p = embed_args.instance();
        Nfa seed = embed_args.language(p.alphabet());
        EmbedTrace trace = mu_iterate(p, seed, embed_opts.max_iter);
        if (!trace.seed_independent)
            err << "warning: seed is not independent; embedding guarantees "
                   "do not apply\n";
        if (!embed_opts.trace_dir.empty()) {
            std::filesystem::create_directories(embed_opts.trace_dir);
            int dump_len = embed_opts.enum_len >= 0 ? embed_opts.enum_len : 8;
            for (std::size_t i = 0; i < trace.iterates.size(); ++i) {
                std::string stem = embed_opts.trace_dir + "/mu_" +
                                   std::to_string(i);
                write_file(stem + ".aut",
                           detail::render_dfa(trace.iterates[i]));
                write_file(stem + ".words",
                           detail::render_words(enumerate_upto(
                               to_nfa(trace.iterates[i]), dump_len,
                               embed_args.state_budget)));
            }
        }
        if (trace.status == EmbedTrace::Status::converged) {
            out << "converged at " << trace.converged_at << '\n';
        } else {
            out << "cap reached after " << trace.cap << " iterations\n";
            exit_code = kExitNo;
        }
        const Dfa& final_lang = trace.final_language();
        if (!embed_opts.out_path.empty() || embed_opts.enum_len < 0)
            detail::emit(detail::render_dfa(final_lang), embed_opts.out_path,
                         out);
        if (embed_opts.enum_len >= 0)
            out << detail::render_words(
                enumerate_upto(to_nfa(final_lang), embed_opts.enum_len,
                               embed_args.state_budget));
    });

    // ---- check ----------------------------------------------------------
    auto* check = app.add_subcommand(
        "check", "decide independence or maximality of a language");
    check->require_subcommand(1);
    LangArgs check_ind_args, check_max_args;
    auto* check_ind = check->add_subcommand(
        "independent", "is L independent with respect to t?");
    check_ind_args.add_transducer(check_ind);
    check_ind_args.add_lang(check_ind);
    check_ind_args.add_universe(check_ind);
    check_ind_args.add_budget(check_ind);
    check_ind->callback([&] {
        PropertyInstance p = check_ind_args.instance();
        if (is_independent(p, check_ind_args.language(p.alphabet()))) {
            out << "independent\n";
        } else {
            out << "not independent\n";
            exit_code = kExitNo;
        }
    });
    auto* check_max = check->add_subcommand(
        "maximal", "is independent L maximal within the universe?");
    check_max_args.add_transducer(check_max);
    check_max_args.add_lang(check_max);
    check_max_args.add_universe(check_max);
    check_max_args.add_budget(check_max);
    check_max->callback([&] {
        PropertyInstance p = check_max_args.instance();
        MaximalityResult r =
            is_maximal(p, check_max_args.language(p.alphabet()));
        if (r.maximal) {
            out << "maximal\n";
        } else {
            out << "not maximal (witness: " << detail::show_word(*r.witness)
                << ")\n";
            exit_code = kExitNo;
        }
    });

    // ---- verify ---------------------------------------------------------
    auto* verify = app.add_subcommand(
        "verify", "bounded checks of transducer classes");
    verify->require_subcommand(1);
    struct {
        std::string t_path;
        int upto = 8;
    } verify_args;
    auto add_verify = [&](const std::string& name, const std::string& desc,
                          auto&& action) {
        auto* cmd = verify->add_subcommand(name, desc);
        cmd->add_option("-t,--transducer", verify_args.t_path,
                        "transducer file")
            ->required();
        cmd->add_option("--upto", verify_args.upto,
                        "check inputs up to this length");
        cmd->callback([&, action] {
            action(load_transducer_file(verify_args.t_path),
                   verify_args.upto);
        });
    };
    add_verify("altering", "w never in t(w)", [&](const Transducer& t,
                                                  int n) {
        if (auto w = verify_input_altering(t, n)) {
            out << "witness: " << detail::show_word(*w) << '\n';
            exit_code = kExitNo;
        } else {
            out << "pass\n";
        }
    });
    add_verify("decreasing", "every output below the input in radix order",
               [&](const Transducer& t, int n) {
                   if (auto w = verify_input_decreasing(t, n)) {
                       out << "witness: (" << detail::show_word(w->input)
                           << ", " << detail::show_word(w->output) << ")\n";
                       exit_code = kExitNo;
                   } else {
                       out << "pass\n";
                   }
               });
    add_verify("transitive", "t(t(x)) within t(x)",
               [&](const Transducer& t, int n) {
                   if (auto w = verify_transitive(t, n)) {
                       out << "witness: " << detail::show_word(*w) << '\n';
                       exit_code = kExitNo;
                   } else {
                       out << "pass\n";
                   }
               });

    // ---- lang -----------------------------------------------------------
    auto* lang = app.add_subcommand("lang", "regular language utilities");
    lang->require_subcommand(1);
    struct {
        std::vector<std::string> specs;
        std::string alphabet;
        int upto = 8;
        int state_budget = kDefaultStateBudget;
    } lang_args;
    auto lang_alphabet = [&]() -> std::optional<Alphabet> {
        if (!lang_args.alphabet.empty())
            return Alphabet(lang_args.alphabet);
        return std::nullopt;
    };
    auto add_lang_cmd = [&](const std::string& name, const std::string& desc,
                            int arity, auto&& action) {
        auto* cmd = lang->add_subcommand(name, desc);
        cmd->add_option("spec", lang_args.specs, "language spec(s)")
            ->required()
            ->expected(arity);
        cmd->add_option("--alphabet", lang_args.alphabet,
                        "alphabet for re:/words: specs");
        cmd->add_option("--state-budget", lang_args.state_budget,
                        "cap on intermediate automaton sizes");
        if (name == "enumerate")
            cmd->add_option("--upto", lang_args.upto, "length bound");
        cmd->callback([&, action] { action(); });
    };
    add_lang_cmd("equal", "do two specs denote the same language?", 2, [&] {
        auto alphabet = lang_alphabet();
        Nfa a = lang_from_spec(lang_args.specs.at(0), alphabet);
        if (!alphabet) alphabet = a.alphabet();
        Nfa b = lang_from_spec(lang_args.specs.at(1), alphabet);
        if (equals(a, b, lang_args.state_budget)) {
            out << "equal\n";
        } else {
            out << "not equal\n";
            exit_code = kExitNo;
        }
    });
    add_lang_cmd("empty", "is the language empty?", 1, [&] {
        Nfa a = lang_from_spec(lang_args.specs.at(0), lang_alphabet());
        if (is_empty(a)) {
            out << "empty\n";
        } else {
            out << "nonempty\n";
            exit_code = kExitNo;
        }
    });
    add_lang_cmd("enumerate", "list accepted words in radix order", 1, [&] {
        Nfa a = lang_from_spec(lang_args.specs.at(0), lang_alphabet());
        out << detail::render_words(
            enumerate_upto(a, lang_args.upto, lang_args.state_budget));
    });

    // ---- dispatch -------------------------------------------------------
    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return exit_code;
}

}  // namespace maxcode::cli

#pragma once

/**
 * @file cli.hpp
 * @brief The `coreseq` command line: omega, oracle, guess, tri, seq, verify.
 *
 * Machine-readable lines start with `#data` (sequences), `#rec`
 * (recurrences) or `#eq` (algebraic equations). Exit status is 0 on
 * success, 1 when a verification fails and 2 on usage or input errors.
 */

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "acceptance.hpp"
#include "cfinite.hpp"
#include "convolve.hpp"
#include "fp/oracle.hpp"
#include "guessing.hpp"
#include "omega.hpp"
#include "scenario.hpp"

namespace coreseq::cli {

enum exit_code : int { ok = 0, verification_failed = 1, usage = 2 };

namespace detail {

inline std::string read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) throw invalid_argument("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// A comma separated list, or the name of a file holding one (commas or
/// whitespace between values).
inline std::vector<Rational> read_terms(std::string const& arg) {
    std::ifstream in(arg);
    if (!in) return parse_rational_list(arg);
    std::string text = read_file(arg), flat;
    for (char c : text) flat += std::isspace(static_cast<unsigned char>(c)) ? ',' : c;
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start < flat.size()) {
        auto comma = flat.find(',', start);
        auto piece = flat.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!piece.empty()) out.push_back(parse_rational(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

/// Guess search options shared by several subcommands.
struct guess_flags {
    std::string kind;
    std::size_t max_order = 8, max_offset = 0, deg_t = 4, deg_y = 2, max_poldeg = 3;
    int margin = -1;
    CLI::Option* order_opt = nullptr;

    void attach(CLI::App* app, bool with_kind) {
        if (with_kind) app->add_option("--guess", kind, "cfinite, algebraic or prec");
        order_opt = app->add_option("--max-order", max_order, "largest recurrence order tried; default 8, lowered to fit short inputs");
        app->add_option("--max-offset", max_offset, "largest starting offset tried (cfinite)");
        app->add_option("--deg-t", deg_t, "largest degree in t (algebraic)");
        app->add_option("--deg-y", deg_y, "largest degree in y (algebraic)");
        app->add_option("--max-poldeg", max_poldeg, "largest coefficient degree (prec)");
        app->add_option("--margin", margin, "extra verification terms; default uses up to 8 of the available terms");
    }

    GuessOptions options(std::size_t available) const {
        GuessOptions o;
        o.kind = parse_guess_kind(kind);
        o.max_order = max_order;
        o.max_offset = max_offset;
        o.deg_t = deg_t;
        o.deg_y = deg_y;
        o.max_poldeg = max_poldeg;
        if (o.kind == GuessKind::cfinite && order_opt && order_opt->count() == 0 && available > max_offset)
            o.max_order = std::min(max_order, (available - max_offset) / 2);
        if (margin >= 0) {
            o.margin = static_cast<std::size_t>(margin);
        } else {
            std::size_t base = 0;
            switch (o.kind) {
            case GuessKind::cfinite: base = 2 * o.max_order + max_offset; break;
            case GuessKind::algebraic: base = (deg_t + 1) * (deg_y + 1); break;
            case GuessKind::precursive: base = (max_order + 1) * (max_poldeg + 1); break;
            }
            o.margin = available > base ? std::min<std::size_t>(8, available - base) : 0;
        }
        return o;
    }
};

inline void print_guess(std::ostream& out, GuessReport const& r) {
    out << r.summary() << "\n";
    if (r.found()) out << r.data_line() << "\n";
}

inline std::string data(std::vector<Rational> const& v) { return "#data " + join(v, ","); }

} // namespace detail

/// Runs the command line; `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact sequence tools for tensor powers of modular representations", "coreseq"};
    app.require_subcommand(1);
    int status = ok;

    // omega
    auto* omega = app.add_subcommand("omega", "invariant sequences of a tensor system");
    std::string scenario, invariant = "c";
    std::size_t count = 10;
    bool show_class = false, show_srec = false, show_gamma = false;
    detail::guess_flags omega_guess;
    omega->add_option("--scenario", scenario, "scenario file or builtin:<id> (c7, z3z3, s10-prefix, s9-prefix)")->required();
    omega->add_option("--invariant", invariant, "c, s, d or l");
    omega->add_option("--n", count, "number of terms (n = 1..N)");
    omega->add_flag("--classify", show_class, "print whether T has only nonnegative or nonpositive exponents");
    omega->add_flag("--s-recurrence", show_srec, "print the recurrence for s_n from the characteristic polynomial");
    omega->add_flag("--gamma", show_gamma, "print the growth ratio s_N / s_(N-1)");
    omega_guess.attach(omega, true);

    // oracle
    auto* oracle = app.add_subcommand("oracle", "direct computation over F_p");
    oracle->require_subcommand(1);
    unsigned prime = 7;
    std::string jordan = "2", kinds = "c", module_file;
    std::size_t depth = 5, budget = fp::default_dim_budget;
    bool generic = false;
    auto* cyclic = oracle->add_subcommand("cyclic", "cyclic group of order p, module a sum of Jordan blocks");
    cyclic->add_option("--p", prime, "the prime");
    cyclic->add_option("--jordan", jordan, "Jordan block sizes, comma separated");
    cyclic->add_option("--n", count, "number of tensor powers");
    cyclic->add_option("--kinds", kinds, "comma separated subset of c,s,d,l");
    cyclic->add_flag("--generic", generic, "split free summands explicitly instead of tracking Jordan types");
    cyclic->add_option("--budget", budget, "largest module dimension allowed");
    auto* elab = oracle->add_subcommand("elab", "module given by generator matrices");
    elab->add_option("--file", module_file, "generator file or builtin:z3z3, builtin:z3z3-dual, builtin:z3z3-induced")->required();
    elab->add_option("--n", count, "number of tensor powers");
    elab->add_option("--kinds", kinds, "comma separated subset of c,d,l (s for cyclic groups)");
    elab->add_option("--budget", budget, "largest module dimension allowed");
    auto* channels = oracle->add_subcommand("channels", "dimensions and socles of syzygies and cosyzygies");
    channels->add_option("--file", module_file, "generator file or builtin module")->required();
    channels->add_option("--depth", depth, "number of syzygies in each direction");
    channels->add_option("--budget", budget, "largest module dimension allowed");

    // guess
    auto* guess = app.add_subcommand("guess", "find a relation satisfied by given terms");
    std::string guess_kind, terms_arg;
    detail::guess_flags gflags;
    guess->add_option("kind", guess_kind, "cfinite, algebraic or prec")->required();
    guess->add_option("--terms", terms_arg, "comma separated terms or a file")->required();
    gflags.attach(guess, false);

    // tri
    auto* tri = app.add_subcommand("tri", "n -> P_n applied to a pair of sequences");
    std::string polyseq_file, a_arg, b_arg;
    detail::guess_flags tflags;
    tri->add_option("--polyseq", polyseq_file, "polynomial sequence file")->required();
    tri->add_option("--a", a_arg, "forward sequence: csv or 'rec: ...; prefix: ...'")->required();
    tri->add_option("--b", b_arg, "backward sequence b_0, b_1, ... for negative exponents");
    tri->add_option("--n", count, "number of terms");
    tflags.attach(tri, true);

    // seq
    auto* seq = app.add_subcommand("seq", "C-finite sequence operations");
    std::string op, sa, sb;
    std::size_t factor = 2;
    seq->add_option("op", op, "terms, add, hadamard, partial-sums, dilate, shift, minimize, hilbert")->required();
    seq->add_option("--a", sa, "'rec: c1,...; from: k; prefix: v0,...'")->required();
    seq->add_option("--b", sb, "second operand for add and hadamard");
    seq->add_option("--d", factor, "dilation factor or shift amount");
    seq->add_option("--n", count, "number of terms printed");

    // verify
    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    std::string what;
    verify->add_option("what", what, "'paper'")->required()->check(CLI::IsMember({"paper"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
        out << app.help();
        return ok;
    } catch (CLI::CallForAllHelp const&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (CLI::ParseError const& e) {
        if (e.get_exit_code() == 0) {
            out << app.help(app.get_subcommands().empty() ? "" : app.get_subcommands().back()->get_name());
            return ok;
        }
        err << "usage error: " << e.what() << "\n";
        return usage;
    }

    auto load_module = [](std::string const& src) {
        if (src == "builtin:z3z3") return fp::samples::z3z3_module();
        if (src == "builtin:z3z3-dual") return fp::dual(fp::samples::z3z3_module());
        if (src == "builtin:z3z3-induced") return fp::samples::z3z3_induced();
        return fp::FpModule::parse(detail::read_file(src));
    };

    try {
        if (omega->parsed()) {
            Scenario sc = load_scenario(scenario);
            InvariantKind kind = parse_invariant_kind(invariant);
            std::vector<Rational> values;
            if (sc.is_prefix_only()) {
                if (kind != InvariantKind::s) throw invalid_argument("scenario " + sc.name + " only carries s_n");
                if (count > sc.s_prefix.size())
                    throw coverage_error("scenario " + sc.name + " carries " + std::to_string(sc.s_prefix.size()) + " terms");
                values.assign(sc.s_prefix.begin(), sc.s_prefix.begin() + static_cast<long>(count));
            } else {
                values = invariant_seq(*sc.system, kind, count);
                if (show_class) out << "class: " << to_string(omega_classify(*sc.system)) << "\n";
                if (show_srec) {
                    auto rec = s_recurrence(*sc.system);
                    GuessReport r;
                    r.status = GuessStatus::found;
                    r.rec = rec.coeffs();
                    out << r.data_line() << "   (n >= " << rec.valid_from() + 1 << ")\n";
                }
                if (show_gamma) {
                    auto g = gamma_estimate(*sc.system, std::max<std::size_t>(count, 4));
                    std::ostringstream s;
                    s.precision(10);
                    s << g.ratio;
                    out << "gamma ~ " << s.str() << "; characteristic polynomial " << g.char_poly.to_string("x") << "\n";
                }
            }
            out << detail::data(values) << "\n";
            if (!omega_guess.kind.empty()) detail::print_guess(out, run_guess(values, omega_guess.options(values.size())));
        } else if (cyclic->parsed()) {
            fp::check_prime(prime);
            auto sizes = parse_rational_list(jordan);
            if (sizes.empty()) throw invalid_argument("--jordan needs at least one block size");
            std::optional<fp::FpModule> m;
            for (auto const& s : sizes) {
                if (!is_integer(s) || s < 1) throw invalid_argument("bad Jordan block size " + to_string(s));
                auto block = fp::FpModule::jordan_block(prime, s.get_num().get_ui());
                m = m ? fp::direct_sum(*m, block) : block;
            }
            auto table = fp::oracle_invariants(*m, count, fp::parse_kinds(kinds), budget, generic);
            for (auto const& [k, v] : table.values) out << "#data " << k << " " << join(v, ",") << "\n";
        } else if (elab->parsed()) {
            auto m = load_module(module_file);
            auto table = fp::oracle_invariants(m, count, fp::parse_kinds(kinds), budget, false);
            for (auto const& [k, v] : table.values) out << "#data " << k << " " << join(v, ",") << "\n";
        } else if (channels->parsed()) {
            auto m = load_module(module_file);
            auto h = fp::channel_harvest(m, depth, true, {}, budget);
            out << "#data dim forward " << join(h.forward_dim, ",") << "\n";
            out << "#data dim backward " << join(h.backward_dim, ",") << "\n";
            out << "#data soc forward " << join(h.forward_soc, ",") << "\n";
            out << "#data soc backward " << join(h.backward_soc, ",") << "\n";
            for (auto const* ch : {&h.dim, &h.soc})
                for (auto const* d : {&ch->forward, &ch->backward}) {
                    out << "channel " << ch->name << (d == &ch->forward ? " forward" : " backward");
                    out << " prefix=[" << join(d->prefix, ",") << "]";
                    if (d->tail) out << " tail=" << d->tail->to_string();
                    out << "\n";
                }
        } else if (guess->parsed()) {
            gflags.kind = guess_kind;
            auto terms = detail::read_terms(terms_arg);
            auto r = run_guess(terms, gflags.options(terms.size()));
            detail::print_guess(out, r);
            if (r.found() && !verify_relation(terms, r)) status = verification_failed;
        } else if (tri->parsed()) {
            auto ps = LaurentPolySeq::parse(detail::read_file(polyseq_file));
            auto a = SequenceArg::parse(a_arg);
            auto b = b_arg.empty() ? SequenceArg{ExplicitSeq{{}}} : SequenceArg::parse(b_arg);
            auto values = tri_laurent(ps, a, b, count);
            out << detail::data(values) << "\n";
            if (!tflags.kind.empty()) detail::print_guess(out, run_guess(values, tflags.options(values.size())));
        } else if (seq->parsed()) {
            auto a = CFiniteSeq::parse(sa);
            auto need_b = [&] {
                if (sb.empty()) throw invalid_argument("--b is required for " + op);
                return CFiniteSeq::parse(sb);
            };
            std::optional<CFiniteSeq> r;
            if (op == "terms") r = a;
            else if (op == "add") r = add(a, need_b());
            else if (op == "hadamard") r = hadamard(a, need_b());
            else if (op == "partial-sums") r = partial_sums(a);
            else if (op == "dilate") r = dilate(a, factor);
            else if (op == "shift") r = shift(a, factor);
            else if (op == "minimize") r = minimize(a);
            else if (op == "hilbert") {
                out << hilbert_series(a).to_string() << "\n";
                out << detail::data(a.terms(count)) << "\n";
                return ok;
            } else {
                throw invalid_argument("unknown operation '" + op + "'");
            }
            out << r->to_string() << "\n";
            GuessReport rep;
            rep.status = GuessStatus::found;
            rep.rec = r->coeffs();
            if (!rep.rec.empty()) out << rep.data_line() << "\n";
            out << detail::data(r->terms(count)) << "\n";
        } else if (verify->parsed()) {
            for (auto const& check : acceptance::all_checks()) {
                auto res = check();
                out << res.line() << std::endl;
                if (!res.passed) status = verification_failed;
            }
        }
    } catch (integrity_error const& e) {
        err << "error: " << e.what() << "\n";
        return verification_failed;
    } catch (budget_exceeded const& e) {
        err << "error: " << e.what() << "\n";
        return verification_failed;
    } catch (error const& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    return status;
}

} // namespace coreseq::cli

#pragma once

// Command-line front end for binterp. Kept header-only so the test suite can
// drive it in-process; tools/main.cpp is a thin wrapper.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
// Machine-readable output goes to `out`, diagnostics to `err`.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "binterp/binterp.hpp"

namespace binterp::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failure = 1;
inline constexpr int exit_usage = 2;

/// Rational grid: "lo:hi", "lo:hi:step" or an explicit comma list.
inline std::vector<Rational> parse_grid(const std::string& text) {
    if (text.find(':') == std::string::npos) return parse_rational_list(text);
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 2 && parts.size() != 3) throw parse_error("grid must be lo:hi or lo:hi:step, got '" + text + "'");
    const Rational lo = parse_rational(parts[0]);
    const Rational hi = parse_rational(parts[1]);
    const Rational step = parts.size() == 3 ? parse_rational(parts[2]) : Rational{1};
    if (step <= 0) throw parse_error("grid step must be positive");
    std::vector<Rational> out;
    for (Rational x = lo; x <= hi; x += step) out.push_back(x);
    return out;
}

namespace detail {

struct SequenceSource {
    std::string seq;
    std::string rec;
    std::string rec_file;
    std::size_t n = 0;

    void add_to(CLI::App& cmd, bool with_seq = true) {
        if (with_seq) cmd.add_option("--seq", seq, "comma-separated prefix, or '-' for one prefix per line on stdin");
        cmd.add_option("--rec", rec, "recurrence '<charpoly>;<initial terms>', e.g. 't^2-t-1;0,1'");
        cmd.add_option("--rec-file", rec_file, "recurrence as a JSON record");
        cmd.add_option("--n", n, "number of terms to generate from a recurrence");
    }

    bool has_recurrence() const { return !rec.empty() || !rec_file.empty(); }

    LinearRecurrence recurrence() const {
        if (!rec.empty() && !rec_file.empty()) throw parse_error("give only one of --rec and --rec-file");
        if (!rec.empty()) return parse_recurrence(rec);
        std::ifstream in(rec_file);
        if (!in) throw parse_error("cannot read '" + rec_file + "'");
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception& e) {
            throw parse_error(std::string("bad JSON in '") + rec_file + "': " + e.what());
        }
        return recurrence_from_json(j);
    }

    std::vector<SequencePrefix> prefixes(std::istream& in) const {
        const bool have_seq = !seq.empty();
        if (have_seq == has_recurrence()) throw parse_error("give exactly one of --seq or --rec/--rec-file");
        if (have_seq) {
            auto out = seq == "-" ? read_prefixes(in) : std::vector<SequencePrefix>{parse_prefix(seq)};
            if (out.empty()) throw parse_error("no sequence on standard input");
            if (n != 0)
                for (auto& a : out) a = a.prefix(std::min(n, a.size()));
            return out;
        }
        if (n == 0) throw parse_error("--n is required with a recurrence");
        return {generate(recurrence(), n)};
    }
};

struct OperatorArgs {
    std::string h;
    std::string y;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--h", h, "scale parameter h (p/q)")->required();
        cmd.add_option("--y", y, "shift parameter y (p/q)")->required();
    }

    BinomialOperator value() const { return {parse_rational(h), parse_rational(y)}; }
};

inline std::string to_text(const BinomialOperator& op) { return to_string(op.h) + "," + to_string(op.y); }

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"binterp: the generalized binomial interpolated operator L^(h,y) in exact arithmetic"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    // apply
    detail::OperatorArgs apply_op;
    detail::SequenceSource apply_src;
    auto* apply_cmd = app.add_subcommand("apply", "apply L^(h,y) termwise to a prefix");
    apply_op.add_to(*apply_cmd);
    apply_src.add_to(*apply_cmd);

    // transform
    detail::OperatorArgs transform_op;
    detail::SequenceSource transform_src;
    bool transform_json = false;
    auto* transform_cmd = app.add_subcommand("transform", "recurrence satisfied by L^(h,y)(a)");
    transform_op.add_to(*transform_cmd);
    transform_src.add_to(*transform_cmd, false);
    transform_cmd->add_flag("--json", transform_json, "print a JSON record");

    // compose
    detail::OperatorArgs outer;
    std::string inner_k, inner_w;
    bool compose_json = false;
    auto* compose_cmd = app.add_subcommand("compose", "L^(h,y) o L^(k,w)");
    outer.add_to(*compose_cmd);
    compose_cmd->add_option("--k", inner_k, "inner scale k")->required();
    compose_cmd->add_option("--w", inner_w, "inner shift w")->required();
    compose_cmd->add_flag("--json", compose_json, "print a JSON record");

    // invert
    detail::OperatorArgs invert_op;
    bool invert_json = false;
    auto* invert_cmd = app.add_subcommand("invert", "inverse operator (h != 0)");
    invert_op.add_to(*invert_cmd);
    invert_cmd->add_flag("--json", invert_json, "print a JSON record");

    // verify
    std::string verify_key;
    std::size_t verify_n = 30;
    auto* verify_cmd = app.add_subcommand("verify", "check catalog identities exactly");
    verify_cmd->add_option("key", verify_key, "identity key or 'all'")->required();
    verify_cmd->add_option("--n", verify_n, "largest index checked");

    // fixed
    detail::OperatorArgs fixed_op;
    detail::SequenceSource fixed_src;
    bool fixed_json = false;
    auto* fixed_cmd = app.add_subcommand("fixed", "report whether L^(h,y) fixes a prefix");
    fixed_op.add_to(*fixed_cmd);
    fixed_src.add_to(*fixed_cmd);
    fixed_cmd->add_flag("--json", fixed_json, "print a JSON record");

    // search-fixed
    std::string h_grid, y_grid;
    detail::SequenceSource search_src;
    auto* search_cmd = app.add_subcommand("search-fixed", "list grid points (h,y) whose operator fixes a prefix");
    search_cmd->add_option("--h-grid", h_grid, "lo:hi[:step] or comma list")->required();
    search_cmd->add_option("--y-grid", y_grid, "lo:hi[:step] or comma list")->required();
    search_src.add_to(*search_cmd);

    // decimate
    std::size_t decimate_k = 0;
    detail::SequenceSource decimate_src;
    auto* decimate_cmd = app.add_subcommand("decimate", "subsequence (a_kn); a degree-2 --rec without --n prints its recurrence");
    decimate_cmd->add_option("--k", decimate_k, "step k >= 1")->required();
    decimate_src.add_to(*decimate_cmd);

    // hankel
    detail::SequenceSource hankel_src;
    bool hankel_json = false;
    auto* hankel_cmd = app.add_subcommand("hankel", "Hankel transform of a prefix");
    hankel_src.add_to(*hankel_cmd);
    hankel_cmd->add_flag("--json", hankel_json, "print a JSON array");

    // variant
    detail::OperatorArgs variant_op;
    std::string variant_a0 = "1";
    std::size_t variant_n = 0;
    auto* variant_cmd = app.add_subcommand("variant", "variant sequence a_{n+1} = sum binom(n,i) h^i y^(n-i) a_i");
    variant_op.add_to(*variant_cmd);
    variant_cmd->add_option("--a0", variant_a0, "first term");
    variant_cmd->add_option("--n", variant_n, "number of terms")->required();

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "named sequences");
    catalog_cmd->require_subcommand(1);
    auto* catalog_list = catalog_cmd->add_subcommand("list", "list sequence and identity keys");
    std::string show_key;
    std::size_t show_n = 10;
    auto* catalog_show = catalog_cmd->add_subcommand("show", "print a named prefix");
    catalog_show->add_option("key", show_key, "sequence key")->required();
    catalog_show->add_option("--n", show_n, "number of terms");

    std::vector<const char*> argv{"binterp"};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (*apply_cmd) {
            const auto op = apply_op.value();
            for (const auto& a : apply_src.prefixes(in)) out << to_string(apply(op, a)) << "\n";
            return exit_ok;
        }
        if (*transform_cmd) {
            const auto image = transform_recurrence(transform_op.value(), transform_src.recurrence());
            out << (transform_json ? to_json(image).dump() : to_string(image)) << "\n";
            return exit_ok;
        }
        if (*compose_cmd) {
            const auto op = compose(outer.value(), {parse_rational(inner_k), parse_rational(inner_w)});
            out << (compose_json ? to_json(op).dump() : detail::to_text(op)) << "\n";
            return exit_ok;
        }
        if (*invert_cmd) {
            const auto op = inverse(invert_op.value());
            out << (invert_json ? to_json(op).dump() : detail::to_text(op)) << "\n";
            return exit_ok;
        }
        if (*verify_cmd) {
            std::vector<std::string_view> keys;
            if (verify_key == "all") {
                keys.assign(identity_keys.begin(), identity_keys.end());
                std::sort(keys.begin(), keys.end());
            } else if (is_identity_key(verify_key)) {
                keys.push_back(verify_key);
            } else {
                err << "error: unknown identity key '" << verify_key << "'\n";
                return exit_usage;
            }
            bool all_expected = true;
            for (auto key : keys) {
                const IdentityCase c = verify_identity(key, verify_n);
                out << to_string(c) << "\n";
                all_expected = all_expected && c.as_expected();
            }
            return all_expected ? exit_ok : exit_verification_failure;
        }
        if (*fixed_cmd) {
            const auto op = fixed_op.value();
            bool all_fixed = true;
            for (const auto& a : fixed_src.prefixes(in)) {
                const auto report = check_fixed(op, a);
                if (fixed_json) {
                    out << to_json(report).dump() << "\n";
                } else {
                    out << "operator=" << detail::to_text(report.op) << " verified_length=" << report.verified_length
                        << " fixed=" << (report.fixed ? "true" : "false") << " first_mismatch="
                        << (report.first_mismatch ? std::to_string(*report.first_mismatch) : std::string("-")) << "\n";
                }
                all_fixed = all_fixed && report.fixed;
            }
            return all_fixed ? exit_ok : exit_verification_failure;
        }
        if (*search_cmd) {
            const auto hs = parse_grid(h_grid);
            const auto ys = parse_grid(y_grid);
            if (hs.empty() || ys.empty()) {
                err << "error: empty grid\n";
                return exit_usage;
            }
            const auto prefixes = search_src.prefixes(in);
            for (const auto& h : hs)
                for (const auto& y : ys) {
                    bool fixes = true;
                    for (const auto& a : prefixes) fixes = fixes && is_fixed_prefix({h, y}, a);
                    if (fixes) out << to_string(h) << "," << to_string(y) << "\n";
                }
            return exit_ok;
        }
        if (*decimate_cmd) {
            if (decimate_src.has_recurrence() && decimate_src.n == 0 && decimate_src.seq.empty()) {
                const auto rec = decimate_src.recurrence();
                if (rec.order() != 2) throw invalid_argument("decimate --rec needs a degree-2 recurrence");
                const Degree2Spec spec{rec.initial()[0], rec.initial()[1], Rational(-rec.charpoly().coefficient(1)),
                                       rec.charpoly().coefficient(2)};
                out << to_string(decimated_recurrence(spec, decimate_k)) << "\n";
                return exit_ok;
            }
            for (const auto& a : decimate_src.prefixes(in)) out << to_string(decimate_prefix(a, decimate_k)) << "\n";
            return exit_ok;
        }
        if (*hankel_cmd) {
            for (const auto& a : hankel_src.prefixes(in)) {
                const auto result = hankel_transform(a);
                out << (hankel_json ? to_json(result).dump() : join(result.determinants)) << "\n";
            }
            return exit_ok;
        }
        if (*variant_cmd) {
            const auto op = variant_op.value();
            out << to_string(variant_sequence(op.h, op.y, parse_rational(variant_a0), variant_n)) << "\n";
            return exit_ok;
        }
        if (*catalog_list) {
            out << "sequences:";
            for (auto k : sequence_keys) out << " " << k;
            out << "\nidentities:";
            for (auto k : identity_keys) out << " " << k;
            out << "\n";
            return exit_ok;
        }
        if (*catalog_show) {
            out << to_string(named_prefix(show_key, show_n)) << "\n";
            return exit_ok;
        }
    } catch (const binterp::error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace binterp::cli

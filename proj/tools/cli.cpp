#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "sturm/christoffel.hpp"
#include "sturm/enumeration.hpp"
#include "sturm/forbidden.hpp"
#include "sturm/plot.hpp"
#include "sturm/sturmian.hpp"
#include "sturm/word.hpp"

namespace sturm::cli {

namespace {

using nlohmann::json;

// Thrown for invalid parameters detected after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string shown(const Word& w) { return w.empty() ? "ε" : std::string(w.str()); }

std::string letter_str(Letter c) { return std::string(1, to_char(c)); }

struct GenerateArgs {
    std::string kind;
    std::optional<std::uint32_t> p, q, k, length;
    std::string orientation = "lower";
    std::string format = "plain";
};

void print_words(std::ostream& out, const std::vector<Word>& words, const std::string& format) {
    if (format == "json") {
        auto arr = json::array();
        for (const auto& w : words) arr.push_back(std::string(w.str()));
        out << arr.dump(2) << '\n';
        return;
    }
    for (const auto& w : words) out << w << '\n';
}

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
    if (a.kind == "christoffel") {
        if (!a.p || !a.q) throw UsageError("generate christoffel needs --p and --q");
        const ChristoffelSpec spec{*a.p, *a.q, parse_orientation(a.orientation)};
        const Word w = christoffel_word(spec);
        if (a.format == "json") {
            out << json{{"word", std::string(w.str())},
                        {"p", spec.p},
                        {"q", spec.q},
                        {"orientation", std::string(to_string(spec.orientation))},
                        {"primitive", is_primitive_christoffel(spec)}}
                       .dump(2)
                << '\n';
        } else {
            out << w << '\n';
        }
        return kExitOk;
    }
    if (a.kind == "fibonacci") {
        if (!a.k) throw UsageError("generate fibonacci needs --k");
        Word w = fibonacci_prefix(*a.k);
        if (a.length) {
            if (*a.length > w.size()) {
                throw UsageError("iterate " + std::to_string(*a.k) + " has only " +
                                 std::to_string(w.size()) + " letters");
            }
            w = w.prefix(*a.length);
        }
        print_words(out, {w}, a.format);
        return kExitOk;
    }
    if (a.kind == "bispecial" || a.kind == "central") {
        if (!a.length) throw UsageError("generate " + a.kind + " needs --length");
        const auto set = a.kind == "bispecial" ? bispecial_words(*a.length) : central_words(*a.length);
        print_words(out, {set.begin(), set.end()}, a.format);
        return kExitOk;
    }
    throw UsageError("unknown kind " + a.kind);
}

int cmd_classify(const Word& w, const std::string& format, std::ostream& out) {
    const SpecialClass cls = classify(w);
    const auto decomps = decompose_bispecial(w);
    if (format == "json") {
        auto arr = json::array();
        for (const auto& d : decomps) {
            arr.push_back({{"u", std::string(d.u.str())},
                           {"x", letter_str(d.x)},
                           {"y", letter_str(d.y)},
                           {"n", d.n}});
        }
        out << json{{"word", std::string(w.str())},
                    {"class", std::string(to_string(cls.tag))},
                    {"extension_count", cls.extension_count},
                    {"decompositions", arr}}
                   .dump(2)
            << '\n';
        return kExitOk;
    }
    out << "word: " << shown(w) << '\n';
    out << "class: " << to_string(cls.tag) << '\n';
    out << "extensions: " << cls.extension_count << '\n';
    for (const auto& d : decomps) {
        out << "decomposition: u=" << shown(d.u) << " x=" << to_char(d.x) << " y=" << to_char(d.y)
            << " n=" << d.n << '\n';
    }
    return kExitOk;
}

int cmd_verify(std::uint32_t max_n, std::uint32_t jobs, const std::string& format,
               const Environment& env, std::ostream& out) {
    CensusOptions opts;
    if (env.brute_cap) opts.cap = *env.brute_cap;
    opts.partitions = std::max<std::uint32_t>(1, jobs);
    opts.parallel = jobs > 1;
    const EnumReport report = verify(max_n, opts);
    if (format == "json") {
        out << report.to_json();
    } else if (format == "csv") {
        out << report.to_csv();
    } else {
        out << report.to_plain();
    }
    return report.all_match() ? kExitOk : kExitMismatch;
}

int cmd_forbidden(std::uint32_t n, const std::string& format, std::ostream& out) {
    if (n < 2) throw UsageError("minimal forbidden words are defined for n>1");
    const auto witnesses = minimal_forbidden_structural(n);
    if (format == "json") {
        out << witnesses_to_json(witnesses) << '\n';
        return kExitOk;
    }
    for (const auto& w : witnesses) {
        out << w.word << "  from " << to_string(w.christoffel.orientation) << '('
            << w.christoffel.p << ',' << w.christoffel.q << ") = "
            << christoffel_word(w.christoffel) << "  interior " << shown(w.interior) << '\n';
    }
    return kExitOk;
}

int cmd_plot(const ChristoffelSpec& spec, const std::string& format, const std::string& path,
             std::ostream& out) {
    const std::string picture = format == "svg" ? render_svg(spec) : render_ascii(spec);
    if (path.empty() || path == "-") {
        out << picture;
        return kExitOk;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + path);
    file << picture;
    if (!file.flush()) throw UsageError("cannot write " + path);
    return kExitOk;
}

int cmd_closure(const Word& w, const std::string& side, std::ostream& out) {
    out << (side == "left" ? left_palindromic_closure(w) : right_palindromic_closure(w)) << '\n';
    return kExitOk;
}

}  // namespace

std::optional<std::uint32_t> parse_brute_cap(const char* value) {
    if (value == nullptr || *value == '\0') return std::nullopt;
    const std::string_view text(value);
    std::uint32_t cap = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("STURM_BRUTE_CAP must be a non-negative integer, got \"" +
                                    std::string(text) + "\"");
    }
    return cap;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env) {
    CLI::App app{"Sturmian, central and Christoffel words: generation, classification and counting",
                 "sturm"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Generate Christoffel, Fibonacci, bispecial or central words");
    generate->add_option("kind", gen.kind, "christoffel | fibonacci | bispecial | central")
        ->required()
        ->check(CLI::IsMember({"christoffel", "fibonacci", "bispecial", "central"}));
    generate->add_option("--p", gen.p, "Number of a's (christoffel)");
    generate->add_option("--q", gen.q, "Number of b's (christoffel)");
    generate->add_option("--orientation", gen.orientation, "lower | upper")
        ->check(CLI::IsMember({"lower", "upper"}));
    generate->add_option("--k", gen.k, "Substitution iterations (fibonacci)");
    generate->add_option("--length", gen.length, "Word length (bispecial, central) or prefix length (fibonacci)");
    generate->add_option("--format", gen.format)->check(CLI::IsMember({"plain", "json"}));

    std::string word_text;
    std::string classify_format = "plain";
    auto* classify_cmd = app.add_subcommand("classify", "Classify a word by its extensions");
    classify_cmd->add_option("word", word_text, "Word over {a,b}")->required();
    classify_cmd->add_option("--format", classify_format)->check(CLI::IsMember({"plain", "json"}));

    std::uint32_t max_n = 0;
    std::uint32_t jobs = 1;
    std::string verify_format = "plain";
    auto* verify_cmd = app.add_subcommand("verify", "Compare closed-form counts with exhaustive enumeration");
    verify_cmd->add_option("--max-n", max_n, "Largest length to check")->required();
    verify_cmd->add_option("--jobs", jobs, "Split the census into this many concurrent chunks")
        ->check(CLI::Range(1U, 1024U));
    verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"plain", "json", "csv"}));

    std::uint32_t forbidden_n = 0;
    std::string forbidden_format = "plain";
    auto* forbidden_cmd = app.add_subcommand("forbidden", "List the minimal forbidden words of a length");
    forbidden_cmd->add_option("--n", forbidden_n, "Word length")->required();
    forbidden_cmd->add_option("--format", forbidden_format)->check(CLI::IsMember({"plain", "json"}));

    std::uint32_t plot_p = 0;
    std::uint32_t plot_q = 0;
    std::string plot_orientation = "lower";
    std::string plot_format = "svg";
    std::string plot_out;
    auto* plot_cmd = app.add_subcommand("plot", "Draw a Christoffel word as a lattice path");
    plot_cmd->add_option("--p", plot_p)->required();
    plot_cmd->add_option("--q", plot_q)->required();
    plot_cmd->add_option("--orientation", plot_orientation)->check(CLI::IsMember({"lower", "upper"}));
    plot_cmd->add_option("--format", plot_format)->check(CLI::IsMember({"svg", "ascii-art"}));
    plot_cmd->add_option("--out", plot_out, "Output file (stdout if omitted)");

    std::string closure_side = "right";
    auto* closure_cmd = app.add_subcommand("closure", "Shortest palindrome extending a word");
    closure_cmd->add_option("word", word_text, "Word over {a,b}")->required();
    closure_cmd->add_option("--side", closure_side)->check(CLI::IsMember({"left", "right"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (generate->parsed()) return cmd_generate(gen, out);
        if (classify_cmd->parsed()) return cmd_classify(Word(word_text), classify_format, out);
        if (verify_cmd->parsed()) return cmd_verify(max_n, jobs, verify_format, env, out);
        if (forbidden_cmd->parsed()) return cmd_forbidden(forbidden_n, forbidden_format, out);
        if (plot_cmd->parsed()) {
            return cmd_plot({plot_p, plot_q, parse_orientation(plot_orientation)}, plot_format,
                            plot_out, out);
        }
        if (closure_cmd->parsed()) return cmd_closure(Word(word_text), closure_side, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace sturm::cli

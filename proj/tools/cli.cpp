#include "cli.hpp"

#include <fibword/fibword.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace fibword::cli {

namespace {

using json = nlohmann::ordered_json;

const std::pair<const char*, Command> kCommands[] = {
    {"generate", Command::generate},       {"density", Command::density},
    {"curve", Command::curve},             {"palindromes", Command::palindromes},
    {"scattered", Command::scattered},     {"squarefree", Command::squarefree},
    {"catalan", Command::catalan},         {"fuzzy", Command::fuzzy},
    {"reproduce-3-2", Command::reproduce}, {"verify", Command::verify},
};

template <typename T>
T require(const std::optional<T>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing required flag ") + flag);
    return *v;
}

/// Chooses the smallest built-in alphabet that covers `s`, else the distinct symbols in order.
Alphabet infer_alphabet(const std::string& s) {
    auto covered = [&s](const std::string& symbols) { return s.find_first_not_of(symbols) == std::string::npos; };
    if (covered("01")) return Alphabet::binary();
    if (covered("ab")) return Alphabet::binary_ab();
    if (covered("abc")) return Alphabet::ternary();
    std::string symbols;
    for (char c : s)
        if (symbols.find(c) == std::string::npos) symbols.push_back(c);
    return Alphabet(symbols);
}

Word parse_word(const std::string& s) { return Word(infer_alphabet(s), s); }

FibSeeds parse_seeds(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--seeds expects A,B");
    const std::string first = text.substr(0, comma), second = text.substr(comma + 1);
    const Alphabet a = infer_alphabet(first + second);
    return {Word(a, first), Word(a, second)};
}

json big_json(const BigInt& v) { return io::exact_integer_json(v); }

std::string join_words(const std::vector<Word>& words, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) out += sep;
        out += words[i].str();
    }
    return out;
}

std::string fixed10(double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(10) << v;
    return s.str();
}

std::string emit_json(const json& j) { return j.dump() + "\n"; }

std::string cmd_generate(const RunConfig& c) {
    Word w = c.length ? infinite_prefix(*c.length)
                      : fib_word(require(c.n, "--n"), c.seeds ? parse_seeds(*c.seeds) : FibSeeds::standard());
    switch (c.format) {
        case Format::json: return emit_json(json{{"length", w.size()}, {"word", w.str()}});
        case Format::csv: return "length,word\n" + std::to_string(w.size()) + "," + w.str() + "\n";
        case Format::text: break;
    }
    return w.str() + "\n";
}

std::string cmd_density(const RunConfig& c) {
    const std::string kind = c.kind.value_or("pattern");
    if (kind == "pattern") {
        const Word pattern = parse_word(require(c.pattern, "--pattern"));
        const auto prefix = require(c.prefix, "--prefix");
        const DensitySample s = density(pattern, prefix);
        const BigInt count = io::sample_count(s);
        switch (c.format) {
            case Format::json: return emit_json(json{{"count", big_json(count)}, {"n", s.n}, {"density", s.value_real}});
            case Format::csv: return "count,n,density\n" + count.str() + "," + std::to_string(s.n) + "," + io::format_double(s.value_real) + "\n";
            case Format::text: break;
        }
        return "count: " + count.str() + "\nn: " + std::to_string(s.n) + "\ndensity: " + to_string(s.value) + " (" +
               io::format_double(s.value_real) + ")\n";
    }
    if (kind == "integral") {
        IntegralParams p;
        p.a = c.a.value_or(0.0);
        p.b = c.b.value_or(std::numeric_limits<double>::infinity());
        p.k = c.k.value_or(1.0);
        p.tau = c.tau.value_or(1.0);
        const IntegralEstimate e = integral_density(p);
        switch (c.format) {
            case Format::json:
                return emit_json(json{{"quadrature", e.quadrature}, {"closed_form", e.closed_form}, {"residual", e.residual}, {"converged", e.converged}});
            case Format::csv:
                return "quadrature,closed_form,residual,converged\n" + io::format_double(e.quadrature) + "," + io::format_double(e.closed_form) + "," +
                       io::format_double(e.residual) + "," + (e.converged ? "true" : "false") + "\n";
            case Format::text: break;
        }
        return "quadrature: " + io::format_double(e.quadrature) + "\nclosed_form: " + io::format_double(e.closed_form) +
               "\nresidual: " + io::format_double(e.residual) + "\nconverged: " + (e.converged ? "true" : "false") + "\n";
    }
    if (kind == "expsum") {
        const double v = exp_sum_approx(require(c.n, "--n"));
        if (c.format == Format::json) return emit_json(json{{"n", *c.n}, {"value", v}});
        if (c.format == Format::csv) return "n,value\n" + std::to_string(*c.n) + "," + io::format_double(v) + "\n";
        return io::format_double(v) + "\n";
    }
    throw UsageError("density --kind must be pattern, integral or expsum");
}

std::string real_curve(const RunConfig& c, const std::vector<std::pair<std::uint64_t, double>>& rows) {
    if (c.format == Format::json) {
        json arr = json::array();
        for (const auto& [n, v] : rows) arr.push_back(json{{"n", n}, {"value", v}});
        return emit_json(arr);
    }
    std::string out = "n,value\n";
    for (const auto& [n, v] : rows) out += std::to_string(n) + "," + io::format_double(v) + "\n";
    return out;
}

std::string cmd_curve(const RunConfig& c) {
    const std::string kind = c.kind.value_or("letter");
    const auto n_max = c.n_max.value_or(100);
    std::vector<DensitySample> samples;
    if (kind == "letter") {
        const std::string letter = c.pattern.value_or("0");
        if (letter.size() != 1) throw UsageError("curve --kind letter takes a single-symbol --pattern");
        samples = letter_density_curve(letter[0], n_max);
    } else if (kind == "ratio") {
        samples = ratio_curve(n_max);
    } else {
        std::vector<std::pair<std::uint64_t, double>> rows;
        if (kind == "triangle") {
            for (std::uint64_t n = 1; n <= n_max; ++n) rows.emplace_back(n, triangle_ratio(n));
        } else if (kind == "expsum") {
            for (std::uint64_t n = 0; n <= n_max; ++n) rows.emplace_back(n, exp_sum_approx(n));
        } else if (kind == "kfib") {
            const double k = c.k.value_or(1.0);
            if (k < 1.0 || std::floor(k) != k) throw std::invalid_argument("--k must be a positive integer for kfib curves");
            for (std::uint64_t n = 2; n <= n_max; ++n) rows.emplace_back(n, k_fib_ratio(static_cast<std::uint64_t>(k), n));
        } else {
            throw UsageError("curve --kind must be letter, ratio, triangle, expsum or kfib");
        }
        return real_curve(c, rows);
    }
    if (c.format == Format::json) return emit_json(io::curve_json(samples));
    return io::curve_csv(samples);
}

std::string cmd_palindromes(const RunConfig& c) {
    if (c.length) {
        const auto table = pal_density_table(require(c.prefix, "--prefix"), *c.length);
        if (c.format == Format::json) {
            json arr = json::array();
            for (const auto& [p, s] : table)
                arr.push_back(json{{"palindrome", p.str()}, {"count", big_json(io::sample_count(s))}, {"n", s.n}, {"density", s.value_real}});
            return emit_json(arr);
        }
        return io::pal_density_csv(table);
    }
    if (!c.pattern && c.n) {
        const bool pal = is_numeric_palindrome(static_cast<std::int64_t>(*c.n));
        if (c.format == Format::json) return emit_json(json{{"n", *c.n}, {"palindrome", pal}});
        if (c.format == Format::csv) return "n,palindrome\n" + std::to_string(*c.n) + "," + (pal ? "true" : "false") + "\n";
        return std::to_string(*c.n) + (pal ? " is a palindrome.\n" : " is not a palindrome.\n");
    }
    const PalindromeReport r = pal_factors(parse_word(require(c.pattern, "--pattern")));
    switch (c.format) {
        case Format::json: {
            json list = json::array();
            for (const auto& p : r.pal_factors) list.push_back(p.str());
            return emit_json(json{{"word", r.word.str()}, {"p_count", r.p_count}, {"palindromes", list}});
        }
        case Format::csv: return "palindrome\n" + join_words(r.pal_factors, "\n") + (r.pal_factors.empty() ? "" : "\n");
        case Format::text: break;
    }
    return "P(w) = " + std::to_string(r.p_count) + "\npalindromes: " + join_words(r.pal_factors, " ") + "\n";
}

std::string cmd_scattered(const RunConfig& c) {
    const PalindromeReport r = analyze_palindromes(parse_word(require(c.pattern, "--pattern")));
    const BigInt& sp = *r.sp_count;
    switch (c.format) {
        case Format::json:
            return emit_json(json{{"word", r.word.str()}, {"length", r.word.size()}, {"p_count", r.p_count}, {"sp_count", big_json(sp)}});
        case Format::csv:
            return "word,length,p_count,sp_count\n" + r.word.str() + "," + std::to_string(r.word.size()) + "," + std::to_string(r.p_count) + "," + sp.str() + "\n";
        case Format::text: break;
    }
    return "|w| = " + std::to_string(r.word.size()) + "\nP(w) = " + std::to_string(r.p_count) + "\nSP(w) = " + sp.str() + "\n";
}

std::string cmd_squarefree(const RunConfig& c) {
    if (c.n_max) {
        const auto rows = brandenburg_table(*c.n_max);
        if (c.format == Format::json) {
            json arr = json::array();
            for (const auto& r : rows)
                arr.push_back(json{{"n", r.n}, {"s_n", big_json(r.s_n)}, {"lower", r.lower}, {"upper", r.upper},
                                   {"lower_holds", r.lower_holds}, {"upper_holds", r.upper_holds}});
            return emit_json(arr);
        }
        return io::brandenburg_csv(rows);
    }
    if (c.length) {
        const Word tm = thue_morse_prefix(*c.length);
        if (c.format == Format::json) return emit_json(json{{"length", tm.size()}, {"word", tm.str()}});
        return tm.str() + "\n";
    }
    const auto e = enumerate_square_free(c.alphabet.value_or(3), require(c.n, "--n"));
    switch (c.format) {
        case Format::json: {
            json list = json::array();
            for (const auto& w : e.words) list.push_back(w.str());
            return emit_json(json{{"n", *c.n}, {"count", e.count}, {"words", list}});
        }
        case Format::csv: return "word\n" + join_words(e.words, "\n") + (e.words.empty() ? "" : "\n");
        case Format::text: break;
    }
    return "s(" + std::to_string(*c.n) + ") = " + std::to_string(e.count) + "\n" + join_words(e.words, "\n") + (e.words.empty() ? "" : "\n");
}

std::string cmd_catalan(const RunConfig& c) {
    if (c.n_max) {
        const auto records = catalan_records(*c.n_max);
        if (c.format == Format::json) {
            json arr = json::array();
            for (const auto& r : records)
                arr.push_back(json{{"n", r.n}, {"c_n", big_json(r.c_n)}, {"table_expr", to_string(r.table_expr)}, {"g_n", to_string(r.g_n)}});
            return emit_json(arr);
        }
        return io::catalan_csv(records);
    }
    const auto n = require(c.n, "--n");
    const CatalanRecord r = catalan_record(n);
    std::optional<double> ratio;
    if (n >= 3 && n <= 12) ratio = catalan_fib_ratio(n);
    switch (c.format) {
        case Format::json: {
            json j{{"n", r.n}, {"c_n", big_json(r.c_n)}, {"table_expr", to_string(r.table_expr)}, {"g_n", to_string(r.g_n)}};
            if (ratio) j["fib_ratio"] = *ratio;
            return emit_json(j);
        }
        case Format::csv: return io::catalan_csv({r});
        case Format::text: break;
    }
    std::string out = "C_" + std::to_string(n) + " = " + r.c_n.str() + "\nC_n - 1 = " + to_string(r.table_expr) +
                      "\ng(n) = " + to_string(r.g_n) + " (" + io::format_double(to_double(r.g_n)) + ")\n";
    if (ratio) out += "F(C_n + 1) / F(C_n) = " + fixed10(*ratio) + "\n";
    return out;
}

std::string cmd_fuzzy(const RunConfig& c) {
    const FuzzyWord fw = fuzzy_fib_word(require(c.n, "--n"), c.mu_a.value_or(0.8), c.mu_b.value_or(0.5));
    switch (c.format) {
        case Format::json: return emit_json(io::fuzzy_json(fw));
        case Format::csv: {
            std::string out = "symbol,membership\n";
            for (std::size_t i = 0; i < fw.size(); ++i) out += std::string(1, fw.symbols()[i]) + "," + io::format_double(fw.memberships()[i]) + "\n";
            return out;
        }
        case Format::text: break;
    }
    std::string out = fw.symbols().str() + "\n";
    for (std::size_t i = 0; i < fw.size(); ++i) out += std::string(i ? ", " : "") + "(\"" + fw.symbols()[i] + "\", " + io::format_double(fw.memberships()[i]) + ")";
    out += "\nmembership: " + (fw.empty() ? std::string("n/a") : io::format_double(word_membership(fw))) + "\n";
    return out;
}

struct Reproduction {
    Word word;
    std::size_t ones;
    std::size_t zeros;
    double ratio;
};

/// Seeds "1", "10" at n = 22, with the ratio F(n)/F(n+1) iterated from n = 1000 until
/// successive values differ by less than 1e-10.
Reproduction reproduce_density_program() {
    const Word w = fib_word(22, FibSeeds::program());
    std::uint64_t n = 1000;
    auto ratio_at = [](std::uint64_t m) { return ratio_to_double(fib(m), fib(m + 1)); };
    double ratio = ratio_at(n);
    for (;;) {
        const double next = ratio_at(n + 1);
        if (std::abs(ratio - next) < 1e-10) break;
        ratio = next;
        ++n;
    }
    return {w, letter_count(w, '1'), letter_count(w, '0'), ratio};
}

std::string cmd_reproduce(const RunConfig& c) {
    const Reproduction r = reproduce_density_program();
    switch (c.format) {
        case Format::json:
            return emit_json(json{{"length", r.word.size()}, {"ones", r.ones}, {"zeros", r.zeros}, {"ratio", r.ratio}});
        case Format::csv:
            return "length,ones,zeros,ratio\n" + std::to_string(r.word.size()) + "," + std::to_string(r.ones) + "," + std::to_string(r.zeros) + "," + fixed10(r.ratio) + "\n";
        case Format::text: break;
    }
    return "for the first 100 digits: " + r.word.str().substr(0, 100) + "\nNumber of ones: " + std::to_string(r.ones) +
           "\nNumber of zeros: " + std::to_string(r.zeros) + "\ndensity = as n approaches infinity: " + fixed10(r.ratio) + "\n";
}

std::string cmd_verify(const RunConfig& c, bool& all_ok) {
    const auto results = run_verification();
    all_ok = true;
    for (const auto& r : results) all_ok = all_ok && r.ok();
    if (c.format == Format::json) {
        json arr = json::array();
        for (const auto& r : results) arr.push_back(json{{"suite", r.name}, {"checked", r.checked}, {"mismatches", r.mismatches}});
        return emit_json(arr);
    }
    if (c.format == Format::csv) {
        std::string out = "suite,checked,mismatches\n";
        for (const auto& r : results) out += "\"" + r.name + "\"," + std::to_string(r.checked) + "," + std::to_string(r.mismatches) + "\n";
        return out;
    }
    std::string out;
    for (const auto& r : results)
        out += std::string(r.ok() ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.checked) + " checked, " + std::to_string(r.mismatches) + " mismatches)\n";
    return out;
}

}  // namespace

ParseResult parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Combinatorics on words: Fibonacci words, densities, palindromes, square-free words"};
    app.require_subcommand(1, 1);

    RunConfig cfg;
    std::string format = "text";
    std::optional<std::string> b_text;

    for (const auto& [name, command] : kCommands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--n", cfg.n, "index / length parameter");
        sub->add_option("--pattern", cfg.pattern, "pattern or input word");
        sub->add_option("--prefix", cfg.prefix, "Fibonacci prefix length");
        sub->add_option("--seeds", cfg.seeds, "seed words A,B for the concatenation recurrence");
        sub->add_option("--length", cfg.length, "word / palindrome length");
        sub->add_option("--alphabet", cfg.alphabet, "alphabet size (2 or 3)")->check(CLI::IsMember({2, 3}));
        sub->add_option("--k", cfg.k, "power exponent / k-Fibonacci order");
        sub->add_option("--tau", cfg.tau, "decay constant");
        sub->add_option("--a", cfg.a, "lower integration bound");
        sub->add_option("--b", b_text, "upper integration bound (number or inf)");
        sub->add_option("--mu-a", cfg.mu_a, "membership of a");
        sub->add_option("--mu-b", cfg.mu_b, "membership of b");
        sub->add_option("--n-max", cfg.n_max, "largest n in a curve or table");
        sub->add_option("--kind", cfg.kind, "series kind");
        sub->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
        sub->add_option("--out", cfg.out, "output path (default stdout)");
        sub->callback([&cfg, command = command] { cfg.command = command; });
    }

    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    try {
        app.parse(reversed_args);
        if (b_text) {
            std::size_t used = 0;
            cfg.b = std::stod(*b_text, &used);
            if (used != b_text->size()) throw CLI::ValidationError("--b", "not a number: " + *b_text);
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return {std::nullopt, code == 0 ? kExitOk : kExitUsage};
    } catch (const std::exception&) {
        err << "error: --b: not a number: " << *b_text << '\n';
        return {std::nullopt, kExitUsage};
    }
    cfg.format = format == "json" ? Format::json : (format == "csv" ? Format::csv : Format::text);
    return {cfg, kExitOk};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::string report;
    int status = kExitOk;
    try {
        switch (config.command) {
            case Command::generate: report = cmd_generate(config); break;
            case Command::density: report = cmd_density(config); break;
            case Command::curve: report = cmd_curve(config); break;
            case Command::palindromes: report = cmd_palindromes(config); break;
            case Command::scattered: report = cmd_scattered(config); break;
            case Command::squarefree: report = cmd_squarefree(config); break;
            case Command::catalan: report = cmd_catalan(config); break;
            case Command::fuzzy: report = cmd_fuzzy(config); break;
            case Command::reproduce: report = cmd_reproduce(config); break;
            case Command::verify: {
                bool ok = true;
                report = cmd_verify(config, ok);
                if (!ok) status = kExitMismatch;
                break;
            }
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }

    if (config.out) {
        std::ofstream file(*config.out, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << *config.out << " for writing\n";
            return kExitDomain;
        }
        file << report;
    } else {
        out << report;
    }
    return status;
}

}  // namespace fibword::cli

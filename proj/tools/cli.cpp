#include "cli.hpp"

#include "cfseq/cfseq.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace cfseq::cli {

namespace {

struct RunConfig
{
    std::string f = "1,1";
    std::optional<std::size_t> n;
    unsigned precision = kDefaultPrecision;
    std::string delta = "0.1";
    std::size_t horizon = 4;
    std::string format = "text";
    unsigned digits = 20;
    std::size_t max_terms = kDefaultMaxTerms;
    bool include_x0 = false;
    std::string range = "3:8";
    std::optional<std::size_t> truncation;
    std::string value;
    std::string bfile_dir;
    std::string a112373, a114551, a114552, a114550;
};

PolyF parse_poly(const std::string& text)
{
    std::vector<BigInt> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        coeffs.push_back(parse_decimal(item));
    return make_poly(std::move(coeffs));
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("range must look like FIRST:LAST, got '" + text + "'");
    const long first = std::stol(text.substr(0, colon));
    const long last = std::stol(text.substr(colon + 1));
    if (first < 1 || last < first)
        throw std::invalid_argument("range needs 1 <= FIRST <= LAST");
    return {static_cast<std::size_t>(first), static_cast<std::size_t>(last)};
}

std::string join(std::span<const BigInt> v, const char* sep = ", ")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += sep;
        out += to_decimal(v[i]);
    }
    return out;
}

std::string bracketed(std::span<const BigInt> a)
{
    std::string out = "[" + to_decimal(a[0]);
    for (std::size_t i = 1; i < a.size(); ++i)
        out += (i == 1 ? "; " : ", ") + to_decimal(a[i]);
    return out + "]";
}

const char* pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_gen(const RunConfig& cfg, std::ostream& out)
{
    const std::size_t n = cfg.n.value_or(6);
    const SeqTable t = generate(parse_poly(cfg.f), n, cfg.max_terms);
    if (cfg.format == "json") {
        print_json(out, envelope("sequence_table", to_json(t)));
    } else if (cfg.format == "csv") {
        out << "n,x,y,z\n";
        for (std::size_t i = 0; i <= t.last_index(); ++i) {
            out << i << ',' << to_decimal(t.x(i)) << ',';
            if (i < t.ys().size())
                out << to_decimal(t.y(i));
            out << ',';
            if (i < t.zs().size())
                out << to_decimal(t.z(i));
            out << '\n';
        }
    } else {
        out << "xs: " << join(t.xs()) << '\n';
        out << "ys: " << join(t.ys()) << '\n';
        out << "zs: " << join(t.zs()) << '\n';
    }
    return kOk;
}

int cmd_cf(const RunConfig& cfg, std::ostream& out)
{
    Rational r;
    std::optional<std::vector<BigInt>> predicted;
    std::string convention;
    if (!cfg.value.empty()) {
        r = parse_rational(cfg.value);
    } else {
        const std::size_t n = cfg.n.value_or(6);
        const SeqTable t = generate(parse_poly(cfg.f), n, cfg.max_terms);
        r = partial_sum(t, n);
        predicted = predicted_coeffs(t, n);
        convention = "S_N";
        if (cfg.include_x0) {
            r += Rational(BigInt(1));
            predicted->front() += 1;
            convention = "S_N + 1";
        }
    }
    const CFExpansion cf = cf_expand(r);
    const bool equivalent = !predicted || cf_equivalent(*predicted, cf.a);

    if (cfg.format == "json") {
        json payload = {{"value", to_json(r)}, {"a", quotients_to_json(cf.a)}};
        if (predicted) {
            payload["convention"] = convention;
            payload["predicted_a"] = quotients_to_json(*predicted);
            payload["equivalent"] = equivalent;
        }
        print_json(out, envelope("cf_expansion", std::move(payload)));
    } else {
        out << bracketed(cf.a) << '\n';
        if (predicted)
            out << "predicted " << bracketed(*predicted) << "  " << (equivalent ? "equivalent" : "DIFFERENT") << '\n';
    }
    return equivalent ? kOk : kVerificationFailed;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    const PolyF f = parse_poly(cfg.f);
    const std::size_t n = cfg.n.value_or(kDefaultVerifyDepth);
    const SeqTable t = generate(f, n, cfg.max_terms);
    try {
        const TheoremReport rep = verify_theorem1(t, n);
        const bool ok = rep.all_passed();
        if (cfg.format == "json") {
            json payload = to_json(rep);
            payload["status"] = ok ? "pass" : "fail";
            if (cfg.include_x0)
                payload["shifted_a"] = quotients_to_json(shifted_sum_coeffs(t, 2 * n - 1));
            print_json(out, envelope("theorem_report", std::move(payload)));
        } else {
            const auto count = [](const std::vector<bool>& v) { return std::count(v.begin(), v.end(), true); };
            out << "F = " << join(f.coeffs(), ",") << "   N = " << n << '\n';
            out << "S_N = " << bracketed(rep.expanded_a) << '\n';
            if (cfg.include_x0)
                out << "S_N + 1 coefficients: " << bracketed(shifted_sum_coeffs(t, 2 * n - 1)) << '\n';
            out << std::left;
            out << "  " << std::setw(34) << "interlaced expansion" << pass_fail(rep.match) << '\n';
            out << "  " << std::setw(34) << "q_{2n-1} = y_n - 1" << pass_fail(count(rep.q_odd_ok) == long(n)) << " ("
                << count(rep.q_odd_ok) << '/' << n << ")\n";
            out << "  " << std::setw(34) << "q_{2n} = x_{n+1}" << pass_fail(count(rep.q_even_ok) == long(n)) << " ("
                << count(rep.q_even_ok) << '/' << n << ")\n";
            out << "  " << std::setw(34) << "p_{2n}/q_{2n} = S_{n+1}"
                << pass_fail(count(rep.even_convergent_ok) == long(n)) << '\n';
            out << "  " << std::setw(34) << "Engel form" << pass_fail(rep.engel_ok) << '\n';
            out << "  " << std::setw(34) << "a_{2n}, a_{2n+1} relations (x+1)" << to_string(rep.shallit) << '\n';
            out << (ok ? "PASS" : "FAIL") << '\n';
        }
        return ok ? kOk : kVerificationFailed;
    } catch (const Mismatch& m) {
        if (cfg.format == "json")
            print_json(out, envelope("theorem_report", {{"status", "mismatch"},
                                                        {"check", m.check()},
                                                        {"index", m.index()},
                                                        {"detail", m.what()}}));
        else
            out << "MISMATCH check=\"" << m.check() << "\" index=" << m.index() << '\n' << m.what() << '\n';
        return kVerificationFailed;
    }
}

int cmd_asym(const RunConfig& cfg, std::ostream& out)
{
    const PolyF f = parse_poly(cfg.f);
    const std::size_t n = cfg.n.value_or(kDefaultVerifyDepth);
    const SeqTable t = generate(f, n, cfg.max_terms);
    const AsymptoticReport rep = estimate_C(t, cfg.truncation, cfg.precision);
    bool ok = true;
    for (const ExactFormulaCheck& c : rep.exact_formula)
        ok = ok && c.residual.magnitude_below_pow2(-128);

    if (cfg.format == "json") {
        json payload = to_json(rep, cfg.digits);
        payload["status"] = ok ? "pass" : "fail";
        print_json(out, envelope("asymptotic_report", std::move(payload)));
    } else {
        out << "F = " << join(f.coeffs(), ",") << "   N = " << n << "   P = " << cfg.precision << " bits\n";
        out << "lambda     = " << rep.lambda.to_decimal(cfg.digits) << '\n';
        out << "C          = " << rep.C.to_decimal(cfg.digits) << "   (K = " << rep.truncation_k << ")\n";
        out << "tail bound = " << rep.tail_bound.to_double() << '\n';
        out << "n   ln x_n (actual)        C l^n - ln(c)/d         rel. error   exact-formula residual\n";
        for (std::size_t i = 0; i < rep.predictions.size(); ++i) {
            const TermPrediction& p = rep.predictions[i];
            const ExactFormulaCheck& c = rep.exact_formula[i];
            out << std::left << std::setw(4) << p.n << std::setw(23) << p.actual_log.to_decimal(10) << std::setw(24)
                << p.predicted_log.to_decimal(10) << std::setw(13) << std::setprecision(3) << p.relative_error
                << "< 2^" << c.error_log2 << '\n';
        }
        out << (ok ? "PASS" : "FAIL") << '\n';
    }
    return ok ? kOk : kVerificationFailed;
}

int cmd_roth(const RunConfig& cfg, std::ostream& out)
{
    const PolyF f = parse_poly(cfg.f);
    const auto [first, last] = parse_range(cfg.range);
    RothConfig rc;
    rc.delta = parse_exact_decimal(cfg.delta);
    rc.horizon_offset = cfg.horizon;
    rc.precision = cfg.precision;
    rc.max_terms = cfg.max_terms;
    const EvidenceReport rep = transcendence_evidence(f, first, last, rc);
    const bool ok = rep.growth_ok && rep.all_roth_pass;

    if (cfg.format == "json") {
        json payload = to_json(rep, cfg.digits);
        payload["status"] = ok ? "pass" : "fail";
        print_json(out, envelope("transcendence_evidence", std::move(payload)));
    } else if (cfg.format == "csv") {
        out << to_csv(rep, cfg.digits);
    } else {
        out << "F = " << join(f.coeffs(), ",") << "   lambda = " << rep.lambda.to_decimal(10)
            << "   delta = " << rep.delta.to_string() << '\n';
        out << "growth x_{n+1}^2 > x_n^5: " << pass_fail(rep.growth_ok) << '\n';
        out << "n   E_lo             E_hi             > 2 + delta\n";
        for (const ApproxRecord& r : rep.records)
            out << std::left << std::setw(4) << r.n << std::setw(17) << r.E_lo.to_decimal(12) << std::setw(17)
                << r.E_hi.to_decimal(12) << (r.roth_pass ? "yes" : "no") << '\n';
        out << "onset index: " << rep.onset_index << '\n' << rep.interpretation << '\n';
        out << (ok ? "PASS" : "FAIL") << '\n';
    }
    return ok ? kOk : kVerificationFailed;
}

int cmd_oeis(const RunConfig& cfg, std::ostream& out)
{
    const auto resolve = [&](const std::string& explicit_path, const char* name) -> std::optional<std::filesystem::path> {
        if (!explicit_path.empty())
            return std::filesystem::path(explicit_path);
        if (!cfg.bfile_dir.empty()) {
            std::filesystem::path p = std::filesystem::path(cfg.bfile_dir) / name;
            if (std::filesystem::exists(p))
                return p;
        }
        return std::nullopt;
    };
    OeisBFiles files;
    if (auto p = resolve(cfg.a112373, "b112373.txt"))
        files.terms = read_bfile(*p, "A112373");
    if (auto p = resolve(cfg.a114552, "b114552.txt"))
        files.ratios = read_bfile(*p, "A114552");
    if (auto p = resolve(cfg.a114551, "b114551.txt"))
        files.coefficients = read_bfile(*p, "A114551");
    if (auto p = resolve(cfg.a114550, "b114550.txt"))
        files.digits = read_bfile(*p, "A114550");
    if (!files.terms && !files.ratios && !files.coefficients && !files.digits)
        throw std::invalid_argument("oeis-check: no b-files given (use --bfile-dir or --a112373 ...)");

    const OeisReport rep = oeis_check(files, cfg.n.value_or(kDefaultVerifyDepth));
    const bool ok = rep.all_matched();
    if (cfg.format == "json") {
        print_json(out, envelope("oeis_check", to_json(rep)));
    } else {
        for (const SequenceDiff& d : rep.diffs) {
            out << std::left << std::setw(9) << d.source_id << d.compared << " terms compared: ";
            if (d.matched())
                out << "match\n";
            else
                out << "MISMATCH at index " << *d.first_mismatch << " (b-file " << to_decimal(d.expected)
                    << ", generated " << to_decimal(d.actual) << ")\n";
        }
        out << std::setw(9) << "digits" << rep.digits.computed << " vs " << rep.digits.expected << ": "
            << (rep.digits.ok ? "match" : "MISMATCH") << '\n';
        if (rep.digits.bfile) {
            const SequenceDiff& d = *rep.digits.bfile;
            out << std::setw(9) << d.source_id << d.compared << " certified digits compared: "
                << (d.matched() ? "match" : "MISMATCH at index " + std::to_string(*d.first_mismatch)) << '\n';
        }
        out << (ok ? "PASS" : "FAIL") << '\n';
    }
    return ok ? kOk : kVerificationFailed;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_format_csv)
{
    sub->add_option("--f", cfg.f, "Coefficients of F, constant term first (c0,c1,...,cd)")->capture_default_str();
    sub->add_option("--n", cfg.n, "Depth N");
    sub->add_option("--precision", cfg.precision, "Working precision in bits")
        ->check(CLI::Range(64u, 1u << 16))
        ->capture_default_str();
    std::vector<std::string> formats{"text", "json"};
    if (with_format_csv)
        formats.emplace_back("csv");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
    sub->add_option("--digits", cfg.digits, "Displayed fractional digits for reals")->capture_default_str();
    sub->add_option("--max-terms", cfg.max_terms, "Override the cap on generated terms")->capture_default_str();
}

} // namespace

Rational parse_exact_decimal(const std::string& text)
{
    if (text.find('/') != std::string::npos)
        return parse_rational(text);
    const auto dot = text.find('.');
    if (dot == std::string::npos)
        return Rational(parse_decimal(text));
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("not a decimal number: '" + text + "'");
    const bool negative = !whole.empty() && whole[0] == '-';
    const BigInt int_part = (whole.empty() || whole == "-" || whole == "+") ? BigInt(0) : parse_decimal(whole);
    const BigInt scale = pow(BigInt(10), frac.size());
    const BigInt frac_part = parse_decimal(frac);
    const BigInt magnitude = (int_part < 0 ? BigInt(-int_part) : int_part) * scale + frac_part;
    return Rational(negative ? BigInt(-magnitude) : magnitude, scale);
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Interlaced continued fractions of reciprocal sums for x_{n+2} x_n = x_{n+1}^2 F(x_{n+1})", "cfseq"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* gen = app.add_subcommand("gen", "Generate x_n, y_n, z_n");
    add_common(gen, cfg, true);

    auto* cf = app.add_subcommand("cf", "Continued fraction of a rational or of the partial sum S_N");
    add_common(cf, cfg, false);
    cf->add_option("--value", cfg.value, "Rational p/q to expand instead of S_N");
    cf->add_flag("--include-x0", cfg.include_x0, "Use S_N + 1 (leading quotient 2) instead of S_N");

    auto* verify = app.add_subcommand("verify", "Check the interlacing theorem and its identities up to depth N");
    add_common(verify, cfg, false);
    verify->add_flag("--include-x0", cfg.include_x0, "Also report the S_N + 1 coefficient list");

    auto* asym = app.add_subcommand("asym", "Characteristic root, growth constant C and the closed form for ln x_n");
    add_common(asym, cfg, false);
    asym->add_option("--k", cfg.truncation, "Series truncation K (default: every available alpha_k)");

    auto* roth = app.add_subcommand("roth", "Approximation exponents of the even convergents");
    add_common(roth, cfg, true);
    roth->add_option("--range", cfg.range, "Indices FIRST:LAST")->capture_default_str();
    roth->add_option("--delta", cfg.delta, "Margin delta in E > 2 + delta")->capture_default_str();
    roth->add_option("--horizon", cfg.horizon, "Horizon offset M - n (>= 4)")->capture_default_str();

    auto* oeis = app.add_subcommand("oeis-check", "Compare against local OEIS b-files");
    add_common(oeis, cfg, false);
    oeis->add_option("--bfile-dir", cfg.bfile_dir, "Directory holding b112373.txt, b114551.txt, ...");
    oeis->add_option("--a112373", cfg.a112373, "b-file for x_n");
    oeis->add_option("--a114551", cfg.a114551, "b-file for the quotients of S + 1");
    oeis->add_option("--a114552", cfg.a114552, "b-file for y_n");
    oeis->add_option("--a114550", cfg.a114550, "b-file for the decimal digits of S + 1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    try {
        if (gen->parsed())
            return cmd_gen(cfg, out);
        if (cf->parsed())
            return cmd_cf(cfg, out);
        if (verify->parsed())
            return cmd_verify(cfg, out);
        if (asym->parsed())
            return cmd_asym(cfg, out);
        if (roth->parsed())
            return cmd_roth(cfg, out);
        if (oeis->parsed())
            return cmd_oeis(cfg, out);
    } catch (const RejectedPoly& e) {
        err << "rejected polynomial: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const ConfigRejected& e) {
        err << "warning: configuration rejected: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kIoError;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kIoError;
    } catch (const Mismatch& e) {
        err << "verification mismatch: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const InexactDivision& e) {
        err << "verification mismatch: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const InsufficientTerms& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kInvalidInput;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<char*> argv;
    std::vector<std::string> storage(args);
    storage.insert(storage.begin(), "cfseq");
    for (std::string& s : storage)
        argv.push_back(s.data());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace cfseq::cli

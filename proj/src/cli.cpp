#include "rcparts/cli.hpp"

#include "rcparts/asymptotics.hpp"
#include "rcparts/checks.hpp"
#include "rcparts/eulermac.hpp"
#include "rcparts/partitions.hpp"
#include "rcparts/specfun.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace rcparts {

namespace {

enum class Format { csv, md, json };

struct GlobalOptions {
    std::string format = "md";
    int digits = 6;
    bool full = false;
    bool timings = false;
};

/// A rectangular table of strings; every renderer prints the same cells.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    /// Columns rendered as JSON numbers when they fit exactly in a double.
    std::vector<bool> numeric;
};

Format parse_format(const std::string& s)
{
    if (s == "csv")
        return Format::csv;
    if (s == "md")
        return Format::md;
    if (s == "json")
        return Format::json;
    throw CLI::ValidationError("--format", "unknown format '" + s + "' (expected csv, md or json)");
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

bool is_exact_json_integer(const std::string& s)
{
    if (s.empty() || s.size() > 16)
        return false;
    const std::size_t start = s[0] == '-' ? 1 : 0;
    if (start == s.size())
        return false;
    return std::all_of(s.begin() + static_cast<long>(start), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

void render(const Table& t, Format f, std::ostream& out)
{
    switch (f) {
    case Format::csv:
        for (std::size_t i = 0; i < t.header.size(); ++i)
            out << (i ? "," : "") << csv_field(t.header[i]);
        out << '\n';
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << csv_field(row[i]);
            out << '\n';
        }
        break;
    case Format::md:
        out << '|';
        for (const auto& h : t.header)
            out << ' ' << h << " |";
        out << "\n|";
        for (std::size_t i = 0; i < t.header.size(); ++i)
            out << "---|";
        out << '\n';
        for (const auto& row : t.rows) {
            out << '|';
            for (const auto& cell : row)
                out << ' ' << cell << " |";
            out << '\n';
        }
        break;
    case Format::json: {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& row : t.rows) {
            nlohmann::ordered_json obj;
            for (std::size_t i = 0; i < row.size(); ++i) {
                const bool num = i < t.numeric.size() && t.numeric[i] && is_exact_json_integer(row[i]);
                if (num)
                    obj[t.header[i]] = std::stoll(row[i]);
                else
                    obj[t.header[i]] = row[i];
            }
            arr.push_back(std::move(obj));
        }
        out << arr.dump(2) << '\n';
        break;
    }
    }
}

std::string abbreviate(const std::string& digits, bool full)
{
    const std::size_t body = digits.size() - (digits[0] == '-' ? 1 : 0);
    if (full || body <= 20)
        return digits;
    const std::size_t lead = digits.size() - body + 20;
    return digits.substr(0, lead) + "...(" + std::to_string(body) + " digits)";
}

std::vector<long> parse_long_list(const std::string& s, const std::string& what)
{
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
        if (item.empty())
            continue;
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size())
            throw CLI::ValidationError(what, "not an integer: '" + item + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw CLI::ValidationError(what, "empty list");
    return out;
}

std::vector<ExactRational> parse_rational_list(const std::string& s)
{
    std::vector<ExactRational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        ExactRational q;
        if (item.empty() || q.set_str(item, 10) != 0 || q.get_den() == 0)
            throw CLI::ValidationError("--a", "not a rational: '" + item + "'");
        q.canonicalize();
        if (sgn(q) <= 0)
            throw CLI::ValidationError("--a", "shift must be positive: '" + item + "'");
        out.push_back(q);
    }
    if (out.empty())
        throw CLI::ValidationError("--a", "empty list");
    return out;
}

std::string sci(double x)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6e", x);
    return buf;
}

int cmd_exact(long n, long r, long N, std::ostream& out)
{
    if (n < 1)
        throw CLI::ValidationError("--n", "must be >= 1");
    const ResidueClass cls(r, N);
    const auto table = partition_table(n);
    out << to_string(parts_count_exact(n, cls, table).value) << '\n';
    return 0;
}

int cmd_table(long N, const std::string& rs, const std::string& ns, const GlobalOptions& g, std::ostream& out)
{
    const Format f = parse_format(g.format);
    if (g.digits < 1)
        throw CLI::ValidationError("--digits", "must be >= 1");
    const auto n_list = parse_long_list(ns, "--ns");
    if (!std::is_sorted(n_list.begin(), n_list.end()) || n_list.front() < 1)
        throw CLI::ValidationError("--ns", "must be ascending positive integers");
    std::vector<ResidueClass> classes;
    if (rs.empty())
        for (long r = 1; r <= N; ++r)
            classes.emplace_back(r, N);
    else
        for (long r : parse_long_list(rs, "--rs"))
            classes.emplace_back(r, N);

    const auto table = partition_table(n_list.back());
    Table t{{"n", "r", "exact", "q"}, {}, {true, true, true, false}};
    for (const auto& cls : classes) {
        const auto sieve = divisor_class_sieve(n_list.back(), cls);
        for (long n : n_list) {
            const PartCount pc{n, cls, parts_count_from_sieve(n, sieve, table)};
            std::string q = "NA";
            if (sgn(pc.value) > 0 && main_term_log(n, cls).total.sign > 0)
                q = truncate_decimals(ratio_Q(pc), g.digits);
            t.rows.push_back({std::to_string(n), std::to_string(cls.residue()), abbreviate(to_string(pc.value), g.full), q});
        }
    }
    // rows grouped by n, residues in input order
    std::stable_sort(t.rows.begin(), t.rows.end(),
                     [](const auto& a, const auto& b) { return std::stol(a[0]) < std::stol(b[0]); });
    render(t, f, out);
    return 0;
}

int cmd_diff(long n, long r, long N, const GlobalOptions& g, std::ostream& out)
{
    const Format f = parse_format(g.format);
    if (n < 1)
        throw CLI::ValidationError("--n", "must be >= 1");
    if (N < 3 || r < 1 || r >= N || std::gcd(r, N) != 1)
        throw CLI::ValidationError("--r", "need N >= 3, 1 <= r < N and gcd(r, N) = 1");
    const auto table = partition_table(n);
    const BigCount diff =
        parts_count_exact(n, ResidueClass(r, N), table).value - parts_count_exact(n, ResidueClass(N - r, N), table).value;
    const LogValue approx = diff_main_term(n, r, N);
    std::string ratio = "NA";
    if (sgn(diff) != 0 && !approx.is_zero()) {
        const double mag = std::exp(log_of_bigcount(abs(diff)) - approx.log_abs);
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.10f", sgn(diff) * approx.sign * mag);
        ratio = buf;
    }
    Table t{{"n", "r", "mod", "exact_diff", "approx", "ratio"}, {}, {true, true, true, true, false, false}};
    t.rows.push_back({std::to_string(n), std::to_string(r), std::to_string(N), abbreviate(to_string(diff), g.full),
                      approx.to_scientific(10), ratio});
    render(t, f, out);
    return 0;
}

int cmd_em_check(const std::string& as, int kmin, int kmax, const GlobalOptions& g, std::ostream& out)
{
    const Format f = parse_format(g.format);
    if (kmin < 2 || kmax < kmin || kmax > 40)
        throw CLI::ValidationError("--kmin/--kmax", "need 2 <= kmin <= kmax <= 40");
    Table t{{"a", "k", "lemma_residual", "lemma_C", "zagier_M1", "zagier_M2", "zagier_M3"}, {}, {false, true}};
    for (const auto& a : parse_rational_list(as)) {
        const auto spec = fstar_expansion_spec<Quad>(a, 3);
        for (int k = kmin; k <= kmax; ++k) {
            const Quad tq = ldexp(Quad(1), -k);
            const Quad R = em_residual(a, tq);
            const Quad C = abs(R) / (tq * abs(log(tq)));
            const Quad S = fstar_lattice_sum(a, tq);
            std::vector<std::string> row = {a.get_str(), std::to_string(k), sci(R.convert_to<double>()),
                                            sci(C.convert_to<double>())};
            for (int M = 1; M <= 3; ++M)
                row.push_back(sci((S - zagier_expansion(spec, tq, M)).convert_to<double>()));
            t.rows.push_back(std::move(row));
        }
    }
    render(t, f, out);
    return 0;
}

int cmd_check(const std::string& suite, const GlobalOptions& g, std::ostream& out)
{
    const auto& names = check_suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw CLI::ValidationError("suite", "unknown suite '" + suite + "'");
    const auto t0 = std::chrono::steady_clock::now();
    const CheckReport rep = run_check_suite(suite);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& r : rep.results)
        out << (r.passed ? "PASS  " : "FAIL  ") << r.label << ": " << r.measured << '\n';
    out << "suite " << rep.suite << ": " << (rep.passed() ? "PASS" : "FAIL");
    if (g.timings) {
        char buf[32];
        std::snprintf(buf, sizeof buf, " (%.2f s)", secs);
        out << buf;
    }
    out << '\n';
    return rep.passed() ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact and asymptotic counts of partition parts in residue classes", "rcparts"};
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--format", g.format, "Output format: csv, md or json")->capture_default_str();
    app.add_option("--digits", g.digits, "Decimal digits kept (truncated) in Q values")->capture_default_str();
    app.add_flag("--full", g.full, "Print exact values in full instead of abbreviated");
    app.add_flag("--timings", g.timings, "Append wall time to check reports");

    long n = 0, r = 1, N = 1;
    std::string rs, ns, as = "1/3,2/3,1/2,1", suite;
    int kmin = 8, kmax = 18;

    auto* exact = app.add_subcommand("exact", "Exact number of parts = r mod N over all partitions of n");
    exact->add_option("--n", n)->required();
    exact->add_option("--r", r)->required();
    exact->add_option("--mod", N)->required();

    auto* tbl = app.add_subcommand("table", "Exact counts and quotients by the main term");
    tbl->add_option("--mod", N)->required();
    tbl->add_option("--rs", rs, "Comma-separated residues (default 1..N)");
    tbl->add_option("--ns", ns, "Comma-separated ascending n values")->required();

    auto* diff = app.add_subcommand("diff", "Exact T_{r,N}(n) - T_{N-r,N}(n) against its two-term approximation");
    diff->add_option("--n", n)->required();
    diff->add_option("--r", r)->required();
    diff->add_option("--mod", N)->required();

    auto* em = app.add_subcommand("em-check", "Euler-Maclaurin residuals on the grid t = 2^-k");
    em->add_option("--a", as, "Comma-separated positive rational shifts")->capture_default_str();
    em->add_option("--kmin", kmin)->capture_default_str();
    em->add_option("--kmax", kmax)->capture_default_str();

    auto* chk = app.add_subcommand("check", "Run a validation suite: oracle, sumrule, eulermac, wright, table1");
    chk->add_option("suite", suite)->required();

    for (auto* sub : {exact, tbl, diff, em, chk})
        sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (exact->parsed())
            return cmd_exact(n, r, N, out);
        if (tbl->parsed())
            return cmd_table(N, rs, ns, g, out);
        if (diff->parsed())
            return cmd_diff(n, r, N, g, out);
        if (em->parsed())
            return cmd_em_check(as, kmin, kmax, g, out);
        return cmd_check(suite, g, out);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace rcparts

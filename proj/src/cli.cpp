#include "partid/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "partid/chains.hpp"
#include "partid/colored.hpp"
#include "partid/enumerate.hpp"
#include "partid/partition.hpp"
#include "partid/series.hpp"
#include "partid/stockhofe.hpp"
#include "partid/verify.hpp"

namespace partid {

namespace {

using nlohmann::json;

json partition_json(const Partition& p)
{
    json a = json::array();
    for (int x : p.parts())
        a.push_back(x);
    return a;
}

std::vector<int> parse_type_vector(const std::string& text)
{
    std::vector<int> out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ','))
        out.push_back(std::stoi(tok));
    return out;
}

std::pair<int, int> parse_range(const std::string& text)
{
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

/* Rows of the refinement table: types in order of first appearance in the
 * lexicographic-descending enumeration of the congruence side, partitions
 * within a row in that same enumeration order. */
struct TableRow {
    std::vector<int> type;
    std::vector<Partition> b1, b2;
};

std::vector<TableRow> refinement_table(int n)
{
    std::vector<TableRow> rows;
    std::map<std::vector<int>, std::size_t> index;
    for (const std::string& name : {std::string("B1"), std::string("B2")}) {
        for (const Partition& p : list_family(name, n)) {
            std::vector<int> t = preset_type(name, p);
            auto it = index.find(t);
            if (it == index.end()) {
                it = index.emplace(t, rows.size()).first;
                rows.push_back({t, {}, {}});
            }
            (name == "B1" ? rows[it->second].b1 : rows[it->second].b2).push_back(p);
        }
    }
    return rows;
}

std::string type_label(const std::vector<int>& t)
{
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i)
        s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

void print_chain_line(std::ostream& out, const std::string& label, const Partition& p)
{
    std::string text = format_partition(p);
    out << label << " =";
    if (!text.empty())
        out << ' ' << text;
    out << "\n";
}

void print_phi_trace(std::ostream& out, const PhiTrace& tr, bool forward)
{
    print_chain_line(out, "phi: flat skeleton", tr.flat);
    out << "phi: surplus columns =";
    for (std::size_t j = 0; j < tr.costs.size(); ++j)
        out << (j ? "," : " ") << tr.costs[j];
    out << "\n";
    const char* verb = forward ? "insert" : "remove";
    for (std::size_t j = 0; j < tr.stages.size(); ++j) {
        int cost = forward ? tr.costs[j]
                           : tr.costs[tr.costs.size() - tr.stages.size() + j];
        out << "phi: " << verb << " " << cost << " -> " << format_partition(tr.stages[j])
            << "\n";
    }
}

int cmd_count(const std::string& preset_name, int n, const std::string& type_text, int r,
              bool listing, bool as_json, std::ostream& out)
{
    if (n < 0 || n > kMaxN)
        throw std::invalid_argument("n out of range");
    std::optional<std::vector<int>> type;
    if (!type_text.empty()) {
        if (!is_preset_refined(preset_name))
            throw std::invalid_argument("preset " + preset_name + " takes no type vector");
        type = parse_type_vector(type_text);
        if (static_cast<int>(type->size()) != preset_type_arity(preset_name, r))
            throw std::invalid_argument("type vector needs " +
                                        std::to_string(preset_type_arity(preset_name, r)) +
                                        " entries");
    }

    std::vector<Partition> selected;
    i64 count = 0;
    const bool product_family = preset_name == "A1" || preset_name == "B1" ||
                                preset_name == "C1" || preset_name == "D1";
    if (!listing && product_family) {
        // congruence families: read the count off the product series, which
        // stays instant across the whole n <= 200 domain
        TruncatedSeries s = family_series(preset_name, n, r);
        if (type) {
            count = s.coeff(n, *type);
        } else {
            for (const auto& [key, val] : s.terms(n))
                count = checked_add(count, val);
        }
    } else {
        ConstraintSpec spec = preset(preset_name, r);
        for_each_in_family(n, spec, [&](const std::vector<int>& parts) {
            Partition p(parts);
            if (!type || preset_type(preset_name, p, r) == *type) {
                ++count;
                if (listing)
                    selected.push_back(std::move(p));
            }
            return true;
        });
    }

    if (as_json) {
        json j;
        j["preset"] = preset_name;
        j["n"] = n;
        if (preset_name == "D1" || preset_name == "D2")
            j["r"] = r;
        if (type)
            j["type"] = *type;
        j["count"] = count;
        if (listing) {
            json arr = json::array();
            for (const Partition& p : selected)
                arr.push_back(partition_json(p));
            j["partitions"] = arr;
        }
        out << j.dump() << "\n";
    } else if (listing) {
        for (const Partition& p : selected)
            out << format_partition(p) << "\n";
    } else {
        out << count << "\n";
    }
    return 0;
}

int cmd_map(const std::string& direction, const std::string& family, const std::string& text,
            int r, bool trace, bool as_json, std::ostream& out)
{
    const bool forward = direction == "forward";
    if (!forward && direction != "inverse")
        throw std::invalid_argument("direction must be forward or inverse");

    if (family == "macmahon" || family == "andrews") {
        int rr = family == "macmahon" ? 1 : r;
        Partition input = parse_partition(text);
        ChainTrace tr = forward ? andrews_forward(input, rr) : andrews_inverse(input, rr);
        if (as_json) {
            json j;
            j["family"] = family;
            j["direction"] = direction;
            j["r"] = rr;
            j["lambda"] = partition_json(tr.lambda);
            j["mu"] = partition_json(tr.mu);
            j["nu"] = partition_json(tr.nu);
            j["pi"] = partition_json(tr.pi);
            j["rho"] = partition_json(tr.rho);
            j["tau"] = partition_json(tr.tau);
            out << j.dump() << "\n";
        } else {
            print_chain_line(out, "lambda", tr.lambda);
            print_chain_line(out, "mu", tr.mu);
            if (trace) {
                PhiTrace pt;
                if (forward)
                    phi(tr.mu, 2 * rr + 1, &pt);
                else
                    phi_inv(tr.nu, 2 * rr + 1, &pt);
                print_phi_trace(out, pt, forward);
            }
            print_chain_line(out, "nu", tr.nu);
            print_chain_line(out, "pi", tr.pi);
            print_chain_line(out, "rho", tr.rho);
            print_chain_line(out, "tau", tr.tau);
        }
        return 0;
    }

    if (family == "colored") {
        if (forward) {
            Partition tau = parse_partition(text);
            ColoredPartition cp = to_colored(tau, r);
            if (as_json) {
                json j;
                j["family"] = family;
                j["direction"] = direction;
                j["r"] = r;
                j["tau"] = partition_json(tau);
                j["colored"] = format_colored(cp);
                out << j.dump() << "\n";
            } else {
                out << format_colored(cp) << "\n";
            }
        } else {
            ColoredPartition cp = parse_colored(text, r);
            Partition tau = colored_to_tau(cp);
            if (as_json) {
                json j;
                j["family"] = family;
                j["direction"] = direction;
                j["r"] = r;
                j["colored"] = format_colored(cp);
                j["tau"] = partition_json(tau);
                out << j.dump() << "\n";
            } else {
                out << format_partition(tau) << "\n";
            }
        }
        return 0;
    }

    if (family == "companion") {
        if (forward) {
            Partition tau = parse_partition(text);
            ColoredPartition cp = to_colored(tau, 1);
            Partition c2 = colored_to_mod6(cp);
            if (as_json) {
                json j;
                j["family"] = family;
                j["direction"] = direction;
                j["tau"] = partition_json(tau);
                j["colored"] = format_colored(cp);
                j["c2"] = partition_json(c2);
                out << j.dump() << "\n";
            } else {
                out << "colored = " << format_colored(cp) << "\n";
                print_chain_line(out, "c2", c2);
            }
        } else {
            Partition c2 = parse_partition(text);
            ColoredPartition cp = mod6_to_colored(c2);
            Partition tau = colored_to_tau(cp);
            if (as_json) {
                json j;
                j["family"] = family;
                j["direction"] = direction;
                j["c2"] = partition_json(c2);
                j["colored"] = format_colored(cp);
                j["tau"] = partition_json(tau);
                out << j.dump() << "\n";
            } else {
                out << "colored = " << format_colored(cp) << "\n";
                print_chain_line(out, "tau", tau);
            }
        }
        return 0;
    }
    throw std::invalid_argument("unknown map family '" + family + "'");
}

int cmd_table(int n, bool as_json, std::ostream& out)
{
    if (n < 0 || n > 60)
        throw std::invalid_argument("table supports n in [0, 60]");
    std::vector<TableRow> rows = refinement_table(n);
    if (as_json) {
        json j;
        j["n"] = n;
        json arr = json::array();
        for (const TableRow& row : rows) {
            json rj;
            rj["type"] = row.type;
            json b1 = json::array(), b2 = json::array();
            for (const Partition& p : row.b1)
                b1.push_back(partition_json(p));
            for (const Partition& p : row.b2)
                b2.push_back(partition_json(p));
            rj["b1"] = b1;
            rj["b2"] = b2;
            arr.push_back(rj);
        }
        j["rows"] = arr;
        out << j.dump() << "\n";
        return 0;
    }
    out << "(m1,m2)\tB1\tB2\n";
    for (const TableRow& row : rows) {
        std::size_t height = std::max(row.b1.size(), row.b2.size());
        for (std::size_t i = 0; i < height; ++i) {
            out << (i == 0 ? type_label(row.type) : "") << '\t'
                << (i < row.b1.size() ? format_partition(row.b1[i]) : "") << '\t'
                << (i < row.b2.size() ? format_partition(row.b2[i]) : "") << "\n";
        }
    }
    return 0;
}

int cmd_series(const std::string& name, int cap, int r, bool as_json, std::ostream& out)
{
    TruncatedSeries s = family_series(name, cap, r);
    if (as_json) {
        json j;
        j["name"] = name;
        j["N"] = cap;
        if (name == "colored" || name == "D1")
            j["r"] = r;
        json terms = json::array();
        for (int n = 0; n <= cap; ++n)
            for (const auto& [key, val] : s.terms(n)) {
                json t;
                t["n"] = n;
                t["exponents"] = s.unpack(key);
                t["value"] = val;
                terms.push_back(t);
            }
        j["terms"] = terms;
        out << j.dump() << "\n";
        return 0;
    }
    for (int n = 0; n <= cap; ++n)
        for (const auto& [key, val] : s.terms(n)) {
            std::vector<int> exps = s.unpack(key);
            out << n << '\t';
            for (std::size_t i = 0; i < exps.size(); ++i)
                out << (i ? "," : "") << exps[i];
            out << '\t' << val << "\n";
        }
    return 0;
}

int cmd_verify(const std::string& identity, const VerifyOptions& opt, bool as_json,
               std::ostream& out)
{
    VerificationReport rep = verify_identity(identity, opt);
    if (as_json) {
        json j;
        j["identity"] = rep.identity;
        j["passed"] = rep.passed();
        json checks = json::array();
        for (const CheckResult& c : rep.checks) {
            json cj;
            cj["name"] = c.name;
            cj["passed"] = c.passed;
            cj["cases"] = c.cases;
            cj["seconds"] = c.seconds;
            if (!c.passed)
                cj["detail"] = c.detail;
            checks.push_back(cj);
        }
        j["checks"] = checks;
        out << j.dump() << "\n";
    } else {
        rep.print(out);
    }
    return rep.passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact partition-identity toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // accept --json after the subcommand too
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    // count / list
    std::string preset_name, type_text;
    int n = 0, r = 1;
    auto add_family_opts = [&](CLI::App* cmd) {
        cmd->add_option("preset", preset_name, "family preset (A1,A2,A3,B1,B2,C1,C2,D1,D2)")
            ->required();
        cmd->add_option("n", n, "weight")->required();
        cmd->add_option("--type", type_text, "type vector, e.g. 1,1");
        cmd->add_option("--r", r, "parameter r for the D presets");
    };
    CLI::App* count_cmd = app.add_subcommand("count", "count a family of partitions of n");
    add_family_opts(count_cmd);
    CLI::App* list_cmd =
        app.add_subcommand("list", "list a family of partitions of n, largest first");
    add_family_opts(list_cmd);

    // map
    std::string direction, family, partition_text;
    bool trace = false;
    CLI::App* map_cmd = app.add_subcommand("map", "run a bijection on one partition");
    map_cmd->add_option("direction", direction, "forward or inverse")->required();
    map_cmd->add_option("family", family, "macmahon, andrews, colored or companion")->required();
    map_cmd->add_option("partition", partition_text, "partition text, e.g. 9+8+8+5+2+1")
        ->required();
    map_cmd->add_option("--r", r, "parameter r");
    map_cmd->add_flag("--trace", trace, "print the internal bijection steps");

    // verify
    std::string identity, r_range = "1..3", m_range = "2..5";
    int max_n = -1;
    bool serial = false;
    CLI::App* verify_cmd = app.add_subcommand("verify", "re-check an identity exhaustively");
    verify_cmd->add_option("identity", identity, "macmahon, refined, companion, andrews, phi, lemmas, series, colored or all")
        ->required();
    verify_cmd->add_option("--max-n", max_n, "sweep bound (identity-specific default)");
    verify_cmd->add_option("--r", r_range, "r range, e.g. 1..3");
    verify_cmd->add_option("--m", m_range, "modulus range, e.g. 2..5");
    verify_cmd->add_flag("--serial", serial, "disable the parallel sweep kernels");

    // table
    CLI::App* table_cmd =
        app.add_subcommand("table", "print the refinement table of n side by side");
    table_cmd->add_option("n", n, "weight")->required();

    // series
    std::string series_name;
    int series_cap = 40;
    CLI::App* series_cmd =
        app.add_subcommand("series", "print truncated product coefficients as TSV");
    series_cmd->add_option("name", series_name, "A1, B1, C1, D1 or colored")->required();
    series_cmd->add_option("--N", series_cap, "truncation degree");
    series_cmd->add_option("--r", r, "parameter r");

    std::vector<const char*> argv;
    argv.push_back("partid");
    for (const std::string& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (count_cmd->parsed())
            return cmd_count(preset_name, n, type_text, r, false, as_json, out);
        if (list_cmd->parsed())
            return cmd_count(preset_name, n, type_text, r, true, as_json, out);
        if (map_cmd->parsed())
            return cmd_map(direction, family, partition_text, r, trace, as_json, out);
        if (verify_cmd->parsed()) {
            VerifyOptions opt;
            opt.max_n = max_n;
            std::tie(opt.r_lo, opt.r_hi) = parse_range(r_range);
            std::tie(opt.m_lo, opt.m_hi) = parse_range(m_range);
            opt.parallel = !serial;
            return cmd_verify(identity, opt, as_json, out);
        }
        if (table_cmd->parsed())
            return cmd_table(n, as_json, out);
        if (series_cmd->parsed())
            return cmd_series(series_name, series_cap, r, as_json, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand given\n";
    return 2;
}

}  // namespace partid

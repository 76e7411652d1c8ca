#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qmass/batch.hpp"
#include "qmass/group_mass.hpp"
#include "qmass/identities.hpp"
#include "qmass/partition.hpp"
#include "qmass/report_io.hpp"

namespace {

using namespace qmass;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

void describe_mismatch(const IdentityReport& rep) {
    if (!rep.first_mismatch) return;
    const MismatchInfo& mm = *rep.first_mismatch;
    std::cerr << rep.identity << ": first mismatch at degree " << mm.index << " between "
              << rep.routes[mm.route_a].label << " and " << rep.routes[mm.route_b].label << " ("
              << rational_string(rep.routes[mm.route_a].coeffs[mm.index]) << " vs "
              << rational_string(rep.routes[mm.route_b].coeffs[mm.index]) << ")\n";
}

void print_result(const EntryResult& res, const std::string& format) {
    if (res.report) {
        std::cout << (format == "json" ? to_json_string(*res.report) + "\n"
                                       : to_tsv(*res.report));
        describe_mismatch(*res.report);
    } else if (res.numeric) {
        std::cout << (format == "json" ? to_json_string(*res.numeric) + "\n"
                                       : to_tsv(*res.numeric));
    } else if (res.digits) {
        std::cout << (format == "json" ? to_json_string(*res.digits) + "\n"
                                       : to_tsv(*res.digits));
    }
}

std::string entry_header(const BatchEntry& e) {
    std::string out = "# entry " + std::to_string(e.line) + ": " + e.identity;
    for (const auto& [key, value] : e.params) out += " " + key + "=" + std::to_string(value);
    return out + "\n";
}

std::vector<int> parse_lambda_list(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t consumed = 0;
        int v = 0;
        try {
            v = std::stoi(item, &consumed);
        } catch (const std::exception&) {
            consumed = 0;
        }
        if (consumed != item.size()) throw std::invalid_argument("bad lambda entry '" + item + "'");
        parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("lambda must list at least one part");
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1])
            throw std::invalid_argument("lambda must be weakly decreasing (not sorted for you)");
    return parts;
}

int cmd_verify(const std::string& name, const BatchEntry& entry, const std::string& format) {
    if (name == "digits") {
        std::cerr << "use the 'digits' subcommand for digit extraction\n";
        return kExitUsage;
    }
    validate_entry(entry);
    const EntryResult res = run_entry(entry);
    print_result(res, format);
    return res.ok() ? kExitOk : kExitMismatch;
}

int cmd_batch(const std::string& path, const std::string& format, int jobs) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot read batch file '" << path << "'\n";
        return kExitUsage;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const BatchSpec spec = parse_spec(buffer.str());
    const std::vector<EntryResult> results = run_batch(spec, jobs);

    bool all_ok = true;
    if (format == "json") {
        std::string out = "[";
        for (std::size_t i = 0; i < results.size(); ++i) {
            if (i) out += ",";
            if (results[i].report) out += to_json_string(*results[i].report);
            else if (results[i].numeric) out += to_json_string(*results[i].numeric);
            else out += to_json_string(*results[i].digits);
        }
        std::cout << out << "]\n";
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (format != "json") {
            std::cout << entry_header(spec.entries[i]);
            print_result(results[i], format);
            std::cout << "\n";
        }
        all_ok = all_ok && results[i].ok();
    }
    return all_ok ? kExitOk : kExitMismatch;
}

int cmd_aut_order(int p, const std::string& lambda_text, const std::string& format) {
    const Partition lambda(parse_lambda_list(lambda_text));
    const GroupDescriptor g(p, lambda);
    const BigInt group = g.group_order();
    const BigInt aut = aut_order(g);
    const BigInt hol = hol_order(g);
    if (format == "json") {
        std::cout << "{\"p\":" << p << ",\"lambda\":[" << lambda.to_string() << "]"
                  << ",\"group_order\":\"" << group.get_str() << "\""
                  << ",\"aut_order\":\"" << aut.get_str() << "\""
                  << ",\"hol_order\":\"" << hol.get_str() << "\"}\n";
    } else {
        std::cout << "group\taut\thol\n"
                  << group.get_str() << '\t' << aut.get_str() << '\t' << hol.get_str() << '\n';
    }
    return kExitOk;
}

int cmd_mass_table(int p, int max_n, const std::string& format) {
    if (max_n < 0) throw std::invalid_argument("max-n must be nonnegative");
    std::string json = "[";
    if (format != "json") std::cout << "n\tgroup_order\tmass\n";
    for (int n = 0; n <= max_n; ++n) {
        Rational mass = 0;
        for_each_partition(n, [&](const Partition& lambda) {
            mass += Rational(1) / Rational(aut_order(GroupDescriptor(p, lambda)));
        });
        const BigInt order = pow_int(p, static_cast<unsigned long>(n));
        if (format == "json") {
            if (n) json += ",";
            json += "{\"n\":" + std::to_string(n) + ",\"group_order\":\"" + order.get_str() +
                    "\",\"mass\":\"" + rational_string(mass) + "\"}";
        } else {
            std::cout << n << '\t' << order.get_str() << '\t' << rational_string(mass) << '\n';
        }
    }
    if (format == "json") std::cout << json << "]\n";
    return kExitOk;
}

int cmd_digits(int p, int digits, const std::string& format) {
    const DigitsReport rep = compute_constant_digits(p, digits);
    if (format == "json") {
        std::cout << to_json_string(rep) << "\n";
    } else if (format == "tsv") {
        std::cout << to_tsv(rep);
    } else {
        std::cout << rep.value << "\n";
    }
    std::cerr << "certified: n_max=" << rep.truncation_n << ", remainder < 10^-"
              << (rep.digits + 2) << "\n";
    return kExitOk;
}

int cmd_partitions(int n, const PartitionConstraints& c) {
    for_each_partition(n, c, [](const Partition& p) { std::cout << p.to_string() << "\n"; });
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for partition and abelian p-group mass identities"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand(
        "verify", "verify one identity coefficientwise (rr1 rr2 ag hall hall-num "
                  "bounded-exp holomorph gen)");
    std::string v_name;
    long v_r = 0, v_i = 0, v_k = 0, v_p = 0, v_order = 64, v_modulus = 0;
    std::string v_format = "tsv";
    verify->add_option("name", v_name, "identity name")->required();
    auto* opt_r = verify->add_option("--r", v_r, "row count r");
    auto* opt_i = verify->add_option("--i", v_i, "index i");
    auto* opt_k = verify->add_option("--k", v_k, "power k");
    auto* opt_p = verify->add_option("--p", v_p, "prime p");
    auto* opt_order = verify->add_option("--order", v_order, "truncation order (default 64)");
    auto* opt_modulus =
        verify->add_option("--modulus-override", v_modulus, "diagnostic product modulus");
    verify->add_option("--format", v_format, "tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}));

    // batch
    auto* batch = app.add_subcommand("batch", "run a batch spec file");
    std::string b_path, b_format = "tsv";
    int b_jobs = 1;
    batch->add_option("file", b_path, "spec file")->required();
    batch->add_option("--format", b_format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
    batch->add_option("--jobs", b_jobs, "worker threads")->check(CLI::PositiveNumber);

    // aut-order
    auto* aut = app.add_subcommand("aut-order", "|G|, |Aut G|, |Hol G| for a type");
    int a_p = 0;
    std::string a_lambda, a_format = "tsv";
    aut->add_option("--p", a_p, "prime p")->required();
    aut->add_option("--lambda", a_lambda, "comma-separated weakly decreasing parts")->required();
    aut->add_option("--format", a_format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

    // mass-table
    auto* mass = app.add_subcommand("mass-table", "sum of 1/|Aut| per group order p^n");
    int m_p = 0, m_max_n = 0;
    std::string m_format = "tsv";
    mass->add_option("--p", m_p, "prime p")->required();
    mass->add_option("--max-n", m_max_n, "largest exponent n")->required();
    mass->add_option("--format", m_format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

    // digits
    auto* dig = app.add_subcommand("digits", "decimal digits of sum pi(n)/p^n");
    int d_p = 0, d_digits = 0;
    std::string d_format = "plain";
    dig->add_option("--p", d_p, "base (>= 2)")->required();
    dig->add_option("--digits", d_digits, "digit count (1..1000)")->required();
    dig->add_option("--format", d_format, "plain, tsv or json")
        ->check(CLI::IsMember({"plain", "tsv", "json"}));

    // partitions
    auto* parts = app.add_subcommand("partitions", "list partitions of n, one per line");
    int p_n = 0;
    long p_max_part = 0, p_max_len = 0, p_first_k = 0;
    parts->add_option("n", p_n, "the integer to partition")->required();
    auto* opt_max_part = parts->add_option("--max-part", p_max_part, "largest allowed part");
    auto* opt_max_len = parts->add_option("--max-len", p_max_len, "largest allowed number of parts");
    auto* opt_first_k =
        parts->add_option("--first-k-equal", p_first_k, "require part(1) = part(k), zero padded");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (verify->parsed()) {
            BatchEntry entry;
            entry.identity = v_name;
            if (opt_r->count()) entry.params.emplace_back("r", v_r);
            if (opt_i->count()) entry.params.emplace_back("i", v_i);
            if (opt_k->count()) entry.params.emplace_back("k", v_k);
            if (opt_p->count()) entry.params.emplace_back("p", v_p);
            if (opt_order->count()) entry.params.emplace_back("order", v_order);
            if (opt_modulus->count()) entry.params.emplace_back("modulus-override", v_modulus);
            return cmd_verify(v_name, entry, v_format);
        }
        if (batch->parsed()) return cmd_batch(b_path, b_format, b_jobs);
        if (aut->parsed()) return cmd_aut_order(a_p, a_lambda, a_format);
        if (mass->parsed()) return cmd_mass_table(m_p, m_max_n, m_format);
        if (dig->parsed()) return cmd_digits(d_p, d_digits, d_format);
        if (parts->parsed()) {
            PartitionConstraints c;
            if (opt_max_part->count()) c.max_part = static_cast<int>(p_max_part);
            if (opt_max_len->count()) c.max_length = static_cast<int>(p_max_len);
            if (opt_first_k->count()) c.first_k_equal = static_cast<int>(p_first_k);
            return cmd_partitions(p_n, c);
        }
    } catch (const BatchParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

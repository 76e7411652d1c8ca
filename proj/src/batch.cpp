#include "qmass/batch.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <thread>

#include "qmass/group_mass.hpp"

namespace qmass {

BatchParseError::BatchParseError(int line, int column, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + detail),
      line_(line),
      column_(column),
      detail_(detail) {}

namespace {

struct IdentityGrammar {
    std::vector<std::string> required;
    std::vector<std::string> optional;
};

const std::map<std::string, IdentityGrammar>& grammar() {
    static const std::map<std::string, IdentityGrammar> g = {
        {"rr1", {{}, {"order"}}},
        {"rr2", {{}, {"order"}}},
        {"ag", {{"r", "i"}, {"order", "modulus-override"}}},
        {"hall", {{}, {"order"}}},
        {"hall-num", {{"p"}, {"order"}}},
        {"bounded-exp", {{"r"}, {"order"}}},
        {"holomorph", {{}, {"order"}}},
        {"gen", {{"k"}, {"order"}}},
        {"digits", {{"p", "digits"}, {}}},
    };
    return g;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

[[noreturn]] void fail(const BatchEntry& e, int column, const std::string& detail) {
    throw BatchParseError(e.line, column, detail);
}

void check_ranges(const BatchEntry& e) {
    auto value = [&](const std::string& key) { return *param_value(e, key); };
    if (auto order = param_value(e, "order"); order && *order < 0)
        fail(e, 1, "order must be nonnegative");
    if (e.identity == "ag" || e.identity == "bounded-exp") {
        if (value("r") < 1) fail(e, 1, "r must be at least 1");
    }
    if (e.identity == "ag") {
        const long r = value("r"), i = value("i");
        if (i < 1 || i > r + 1) fail(e, 1, "i must lie in 1..r+1");
        if (auto m = param_value(e, "modulus-override"); m && *m < 1)
            fail(e, 1, "modulus-override must be positive");
    }
    if (e.identity == "gen" && value("k") < 0) fail(e, 1, "k must be nonnegative");
    if (e.identity == "hall-num" && !is_prime(static_cast<int>(value("p"))))
        fail(e, 1, "p must be prime");
    if (e.identity == "digits") {
        if (value("p") < 2) fail(e, 1, "p must be at least 2");
        const long d = value("digits");
        if (d < 1 || d > 1000) fail(e, 1, "digits out of range 1..1000");
    }
}

}  // namespace

std::optional<long> param_value(const BatchEntry& entry, const std::string& key) {
    for (const auto& [name, value] : entry.params)
        if (name == key) return value;
    return std::nullopt;
}

void validate_entry(const BatchEntry& entry) {
    const auto it = grammar().find(entry.identity);
    if (it == grammar().end()) fail(entry, 1, "unknown identity '" + entry.identity + "'");
    const IdentityGrammar& g = it->second;
    for (const auto& [key, value] : entry.params) {
        (void)value;
        if (!contains(g.required, key) && !contains(g.optional, key))
            fail(entry, 1, "unknown key " + key + " for identity " + entry.identity);
    }
    for (const std::string& key : g.required)
        if (!param_value(entry, key))
            fail(entry, 1, "missing key " + key + " for identity " + entry.identity);
    check_ranges(entry);
}

BatchSpec parse_spec(const std::string& text) {
    BatchSpec spec;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string line = text.substr(pos, eol - pos);
        ++line_no;
        pos = eol + 1;
        if (eol == text.size() && line.empty() && line_no > 1) break;

        if (const std::size_t hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();

        // Tokenize, remembering 1-based columns.
        std::vector<std::pair<std::string, int>> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            const std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            tokens.emplace_back(line.substr(start, i - start), static_cast<int>(start) + 1);
        }
        if (tokens.empty()) continue;

        BatchEntry entry;
        entry.line = line_no;
        entry.identity = tokens[0].first;
        if (!grammar().count(entry.identity))
            throw BatchParseError(line_no, tokens[0].second,
                                  "unknown identity '" + entry.identity + "'");
        for (std::size_t t = 1; t < tokens.size(); ++t) {
            const auto& [tok, col] = tokens[t];
            const std::size_t eq = tok.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
                throw BatchParseError(line_no, col, "malformed key=value '" + tok + "'");
            const std::string key = tok.substr(0, eq);
            const std::string value_text = tok.substr(eq + 1);
            std::size_t consumed = 0;
            long value = 0;
            try {
                value = std::stol(value_text, &consumed);
            } catch (const std::exception&) {
                consumed = 0;
            }
            if (consumed != value_text.size())
                throw BatchParseError(line_no, col + static_cast<int>(eq) + 1,
                                      "non-integer value '" + value_text + "'");
            if (param_value(entry, key))
                throw BatchParseError(line_no, col, "duplicate key " + key);
            entry.params.emplace_back(key, value);
        }
        try {
            validate_entry(entry);
        } catch (const BatchParseError& e) {
            // Re-anchor validation failures at this line.
            throw BatchParseError(line_no, e.column(), e.detail());
        }
        spec.entries.push_back(std::move(entry));
    }
    return spec;
}

EntryResult run_entry(const BatchEntry& entry) {
    const long order = param_value(entry, "order").value_or(64);
    const std::size_t n = static_cast<std::size_t>(order);
    EntryResult out;
    if (entry.identity == "rr1") {
        out.report = verify_rr_first(n);
    } else if (entry.identity == "rr2") {
        out.report = verify_rr_second(n);
    } else if (entry.identity == "ag") {
        std::optional<int> modulus;
        if (auto m = param_value(entry, "modulus-override")) modulus = static_cast<int>(*m);
        out.report = verify_andrews_gordon(static_cast<int>(*param_value(entry, "r")),
                                           static_cast<int>(*param_value(entry, "i")), n, modulus);
    } else if (entry.identity == "hall") {
        out.report = verify_hall(n);
    } else if (entry.identity == "hall-num") {
        const int p = static_cast<int>(*param_value(entry, "p"));
        out.numeric = verify_hall_numeric(p, static_cast<int>(order), static_cast<int>(order));
    } else if (entry.identity == "bounded-exp") {
        out.report = verify_bounded_exponent(static_cast<int>(*param_value(entry, "r")), n);
    } else if (entry.identity == "holomorph") {
        out.report = verify_holomorph(n);
    } else if (entry.identity == "gen") {
        out.report = verify_generalized(static_cast<int>(*param_value(entry, "k")), n);
    } else if (entry.identity == "digits") {
        out.digits = compute_constant_digits(static_cast<int>(*param_value(entry, "p")),
                                             static_cast<int>(*param_value(entry, "digits")));
    } else {
        throw std::invalid_argument("unknown identity '" + entry.identity + "'");
    }
    return out;
}

std::vector<EntryResult> run_batch(const BatchSpec& spec, int jobs) {
    if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
    std::vector<EntryResult> results(spec.entries.size());
    if (spec.entries.empty()) return results;

    const int workers = std::min<int>(jobs, static_cast<int>(spec.entries.size()));
    if (workers == 1) {
        for (std::size_t i = 0; i < spec.entries.size(); ++i)
            results[i] = run_entry(spec.entries[i]);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(spec.entries.size());
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= spec.entries.size()) return;
                try {
                    results[i] = run_entry(spec.entries[i]);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace qmass

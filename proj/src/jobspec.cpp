#include "fibercone/jobspec.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace fibercone {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    std::vector<std::string> clean;
    for (auto& item : out)
        if (!item.empty()) clean.push_back(std::move(item));
    return clean;
}

std::uint64_t parse_uint(const std::string& s, const std::string& what) {
    std::string t = trim(s);
    if (t.empty()) throw InputError("empty value for " + what);
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw InputError("malformed " + what + ": '" + s + "'");
    if (t.size() > 18) throw InputError(what + " out of range: '" + s + "'");
    return std::stoull(t);
}

} // namespace

PresentationMode JobSpec::resolved_mode() const {
    if (mode) {
        if (*mode == PresentationMode::explicit_positions && q_positions.empty())
            throw InputError("mode 'explicit' needs Q given as indices into the I list");
        if (*mode == PresentationMode::autocomplete && q_exprs.empty())
            throw InputError("mode 'autocomplete' needs Q given as expressions");
        return *mode;
    }
    if (!q_positions.empty()) return PresentationMode::explicit_positions;
    if (!q_exprs.empty()) return PresentationMode::autocomplete;
    throw InputError("job file has no Q: line");
}

JobSpec parse_job(const std::string& text) {
    JobSpec job;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw InputError("line " + std::to_string(lineno) + ": expected 'key: value'");
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));
        for (auto& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (!seen.insert(key).second)
            throw InputError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        if (value.empty())
            throw InputError("line " + std::to_string(lineno) + ": empty value for '" + key + "'");

        if (key == "field") {
            job.field = FieldSpec::parse(value);
        } else if (key == "vars") {
            job.vars = split_list(value);
            if (job.vars.empty())
                throw InputError("line " + std::to_string(lineno) + ": no variables listed");
        } else if (key == "i") {
            job.ideal_exprs = split_list(value);
        } else if (key == "q") {
            std::istringstream probe(value);
            std::string head;
            probe >> head;
            if (head == "indices") {
                std::string rest;
                std::getline(probe, rest);
                for (const auto& item : split_list(rest)) {
                    std::uint64_t idx = parse_uint(item, "reduction index");
                    if (idx == 0)
                        throw InputError("reduction indices are 1-based; got 0");
                    job.q_positions.push_back(static_cast<std::size_t>(idx - 1));
                }
                if (job.q_positions.empty())
                    throw InputError("line " + std::to_string(lineno) + ": no indices listed");
            } else {
                job.q_exprs = split_list(value);
            }
        } else if (key == "mode") {
            if (value == "explicit")
                job.mode = PresentationMode::explicit_positions;
            else if (value == "autocomplete")
                job.mode = PresentationMode::autocomplete;
            else
                throw InputError("line " + std::to_string(lineno) + ": unknown mode '" +
                                 value + "'");
        } else if (key == "cap") {
            job.power_cap = static_cast<std::uint32_t>(parse_uint(value, "power cap"));
        } else if (key == "socle-cap") {
            job.socle_cap = static_cast<std::uint32_t>(parse_uint(value, "socle cap"));
        } else if (key == "seed") {
            job.seed = parse_uint(value, "seed");
        } else {
            throw InputError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (job.vars.empty()) throw InputError("job file has no vars: line");
    if (job.ideal_exprs.empty()) throw InputError("job file has no I: line");
    return job;
}

JobSpec parse_job_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open job file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_job(buf.str());
}

} // namespace fibercone

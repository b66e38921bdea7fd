#include <rtgw/report.hpp>

#include <sstream>

namespace rtgw {

bool Report::all_pass() const {
    for (const CheckRecord& r : records)
        if (!r.pass) return false;
    return true;
}

int Report::fail_count() const {
    int n = 0;
    for (const CheckRecord& r : records)
        if (!r.pass) ++n;
    return n;
}

void Report::merge(const Report& other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
}

std::string Report::text() const {
    std::ostringstream os;
    if (!title.empty()) os << title << "\n";
    for (const CheckRecord& r : records) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id;
        if (!r.indices.empty()) os << " (" << r.indices << ")";
        if (!r.note.empty()) os << ": " << r.note;
        os << "\n";
        if (!r.pass && !r.lhs.empty()) {
            os << "       lhs = " << r.lhs << "\n";
            os << "       rhs = " << r.rhs << "\n";
        }
    }
    os << records.size() << " checks, " << fail_count() << " failed\n";
    return os.str();
}

nlohmann::json Report::json() const {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckRecord& r : records) {
        // every record carries the same keys so downstream consumers never
        // branch on presence
        nlohmann::json c;
        c["id"] = r.id;
        c["indices"] = r.indices;
        c["pass"] = r.pass;
        c["lhs"] = r.lhs;
        c["rhs"] = r.rhs;
        c["note"] = r.note;
        checks.push_back(std::move(c));
    }
    return nlohmann::json{{"title", title}, {"pass", all_pass()}, {"checks", std::move(checks)}};
}

}  // namespace rtgw

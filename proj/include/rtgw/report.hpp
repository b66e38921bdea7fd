#pragma once

// Structured pass/fail reporting for relation checks. Consumers either print
// the text form or serialize to JSON for the command line interface.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace rtgw {

struct CheckRecord {
    std::string id;       // stable identifier of the relation being checked
    std::string indices;  // instance labels, e.g. "i=11 j=21"
    bool pass = true;
    std::string lhs;      // rendered sides for comparison checks
    std::string rhs;
    std::string note;
};

struct Report {
    std::string title;
    std::vector<CheckRecord> records;

    bool all_pass() const;
    int fail_count() const;

    void add(CheckRecord r) { records.push_back(std::move(r)); }
    void merge(const Report& other);

    std::string text() const;
    nlohmann::json json() const;
};

}  // namespace rtgw

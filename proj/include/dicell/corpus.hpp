#pragma once

#include "dicell/digraph.hpp"

#include <string>
#include <vector>

namespace dicell {

/// Machine-readable reference fixture: a digraph plus an expectations record
/// (JSON) interpreted by the corpus runner.
struct fixture {
    std::string id;
    digraph graph;
    std::string expectations_json;
};

std::string default_fixture_dir();
std::vector<std::string> list_fixture_ids(const std::string& dir = default_fixture_dir());
fixture load_fixture(const std::string& id, const std::string& dir = default_fixture_dir());

struct corpus_result {
    std::string fixture_id;
    std::string check;
    bool pass = false;
    std::string detail;
};

struct corpus_report {
    std::vector<corpus_result> results;
    int passed = 0, failed = 0;
    bool ok() const { return failed == 0 && passed > 0; }
};

/// Runs every expectation of every fixture whose id starts with the filter.
corpus_report run_corpus(const std::string& filter = "",
                         const std::string& dir = default_fixture_dir());

}  // namespace dicell

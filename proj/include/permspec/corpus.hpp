#pragma once

#include <string>
#include <vector>

#include "permspec/bigcount.hpp"
#include "permspec/group_engine.hpp"

namespace permspec {

// One member of the built-in corpus: every family constructor the
// library ships, instantiated at the sizes the checks and tests sweep.
struct CorpusEntry {
    std::string name;
    std::vector<std::string> tags;
    GroupEngine engine;
    BigCount expected_order;
    std::vector<int> sharply_k;  // claimed sharp k-transitivities, may be empty
    bool expect_sharp = false;   // expected Blichfeldt-equality verdict
};

// data_dir must contain the Mathieu generator files.
std::vector<CorpusEntry> builtin_corpus(const std::string& data_dir);

} // namespace permspec

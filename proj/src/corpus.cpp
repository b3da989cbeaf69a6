#include "permspec/corpus.hpp"

#include "permspec/families.hpp"

namespace permspec {

std::vector<CorpusEntry> builtin_corpus(const std::string& data_dir) {
    std::vector<CorpusEntry> corpus;
    auto add = [&](std::string name, std::vector<std::string> tags, GroupEngine engine,
                   BigCount expected_order, std::vector<int> sharply_k, bool expect_sharp) {
        corpus.push_back(CorpusEntry{std::move(name), std::move(tags), std::move(engine),
                                     std::move(expected_order), std::move(sharply_k),
                                     expect_sharp});
    };

    for (int n = 4; n <= 7; ++n)
        add("S" + std::to_string(n), {"symmetric", "sharply-k-transitive"}, symmetric_group(n),
            factorial(n), {n, n - 1}, true);
    for (int n = 6; n <= 8; ++n)
        add("A" + std::to_string(n), {"alternating", "sharply-k-transitive"},
            alternating_group(n), factorial(n).exact_div(BigCount(2), "corpus"), {n - 2}, true);
    for (int n = 2; n <= 12; ++n)
        add("C" + std::to_string(n), {"cyclic", "regular"}, cyclic_regular(n), BigCount(n), {1},
            true);
    // D3 is Sym(3), hence sharply 2- and 3-transitive; the larger
    // dihedral groups are not sharp.
    add("D3", {"dihedral", "sharply-k-transitive"}, dihedral(3), BigCount(6), {3, 2}, true);
    // D4 is the square-symmetry group: sharp without being sharply transitive
    add("D4", {"dihedral", "square-symmetry"}, dihedral(4), BigCount(8), {}, true);
    for (int n = 5; n <= 7; ++n)
        add("D" + std::to_string(n), {"dihedral"}, dihedral(n), BigCount(2 * n), {}, false);
    add("square-symmetry", {"square-symmetry", "sharp"}, dihedral(4), BigCount(8), {}, true);
    for (auto [p, m] : {std::pair{5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        int q = 1;
        for (int i = 0; i < m; ++i)
            q *= p;
        add("Aff(1," + std::to_string(q) + ")", {"affine", "sharply-k-transitive", "frobenius"},
            affine_group(p, m), BigCount(q) * BigCount(q - 1), {2}, true);
    }
    for (int q : {2, 3, 4, 5, 8})
        add("PGL(2," + std::to_string(q) + ")", {"pgl2", "sharply-k-transitive"}, pgl2(q),
            BigCount(q + 1) * BigCount(q) * BigCount(q - 1), {3}, true);
    add("M11", {"mathieu", "sharply-k-transitive"}, mathieu(11, data_dir),
        falling_factorial(11, 4), {4}, true);
    add("M12", {"mathieu", "sharply-k-transitive"}, mathieu(12, data_dir),
        falling_factorial(12, 5), {5}, true);
    add("counterexample-deg6", {"counterexample"}, counterexample_group(), BigCount(8), {},
        false);
    return corpus;
}

} // namespace permspec

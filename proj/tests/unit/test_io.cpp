#include "marvel/graph_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "marvel/graph.hpp"
#include "oracles.hpp"

namespace marvel {
namespace {

TEST(GraphIo, ReadsDagWithComments) {
    std::istringstream in("# star\n4\n0 1\n0 2  # spoke\n\n0 3\n");
    const Dag g = read_dag(in);
    EXPECT_EQ(g.p(), 4);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));
}

TEST(GraphIo, DagRoundTrip) {
    std::mt19937_64 rng(71);
    for (int rep = 0; rep < 20; ++rep) {
        const Dag g = testing::random_dag(rng, 1, 15);
        std::stringstream ss;
        write_dag(ss, g);
        EXPECT_EQ(read_dag(ss), g);
    }
}

TEST(GraphIo, PdagRoundTrip) {
    const Pdag c = cpdag(Dag(5, {{0, 2}, {1, 2}, {2, 3}, {3, 4}}));
    std::stringstream ss;
    write_pdag(ss, c);
    EXPECT_EQ(read_pdag(ss), c);
}

TEST(GraphIo, RejectsMalformedInput) {
    auto dag = [](const std::string& s) {
        std::istringstream in(s);
        return read_dag(in);
    };
    auto pdag = [](const std::string& s) {
        std::istringstream in(s);
        return read_pdag(in);
    };
    EXPECT_THROW((void)dag(""), std::invalid_argument);
    EXPECT_THROW((void)dag("3\n0 5\n"), std::invalid_argument);
    EXPECT_THROW((void)dag("3\n0 1 2\n"), std::invalid_argument);
    EXPECT_THROW((void)dag("3\n0 x\n"), std::invalid_argument);
    EXPECT_THROW((void)dag("2\n0 1\n1 0\n"), std::invalid_argument);
    EXPECT_THROW((void)pdag("3\n0 1 q\n"), std::invalid_argument);
    EXPECT_THROW((void)pdag("3\n0 1 d\n1 0 u\n"), std::invalid_argument);
    try {
        (void)dag("3\n0 1\n1 z\n");
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
}

TEST(GraphIo, Files) {
    const auto dir = std::filesystem::temp_directory_path() / "marvel_io_test";
    std::filesystem::create_directories(dir);
    const Dag g(3, {{0, 1}, {2, 1}});
    write_dag(dir / "g.edges", g);
    EXPECT_EQ(read_dag(dir / "g.edges"), g);
    write_pdag(dir / "g.pdag", cpdag(g));
    EXPECT_EQ(read_pdag(dir / "g.pdag"), cpdag(g));
    EXPECT_THROW((void)read_dag(dir / "missing.edges"), std::invalid_argument);
    std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace marvel

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hh"

#include <pcn/errors.hh>
#include <pcn/families.hh>
#include <pcn/hamming.hh>
#include <pcn/io.hh>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace pcn;

namespace
{
    auto slurp(const std::filesystem::path & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream out;
        out << in.rdbuf();
        return out.str();
    }

    auto parse_error_line(const std::string & text) -> std::string
    {
        std::istringstream in(text);
        try {
            read_dimacs(in);
        }
        catch (const Error & e) {
            CHECK(e.kind() == ErrorKind::Parse);
            return e.what();
        }
        FAIL("accepted malformed input: " << text);
        return {};
    }

    auto lp_text(const Graph & g, std::vector<int> layers, const std::string & name) -> std::string
    {
        auto model = export_ilp(g, all_pairs_distances(g), std::move(layers));
        model.name = name;
        std::ostringstream out;
        write_lp(out, model);
        return out.str();
    }
}

TEST_CASE("DIMACS reading")
{
    std::istringstream in("c a triangle\np edge 3 3\ne 1 2\ne 2 3\n\ne 1 3\n");
    auto g = read_dimacs(in);
    CHECK(g.size() == 3);
    CHECK(g.is_complete());

    std::istringstream col("p col 2 1\ne 2 1\n");
    CHECK(read_dimacs(col).edge_count() == 1);

    CHECK(parse_error_line("p edge 2 1\ne 1 1\n").find("line 2") != std::string::npos);
    CHECK(parse_error_line("p edge 3 2\ne 1 2\ne 2 1\n").find("line 3") != std::string::npos);
    CHECK(parse_error_line("p edge 3 2\ne 1 2\n").size() > 0);
    CHECK(parse_error_line("e 1 2\n").size() > 0);
    CHECK(parse_error_line("p edge 3 1\ne 1 4\n").find("line 2") != std::string::npos);
    CHECK(parse_error_line("p edge 3 1\ne 1 x\n").find("line 2") != std::string::npos);
    CHECK(parse_error_line("p edge 3 1\np edge 3 1\n").find("line 2") != std::string::npos);
}

TEST_CASE("DIMACS round trip")
{
    for (std::uint64_t seed = 0 ; seed < 50 ; ++seed) {
        auto g = random_graph(1 + static_cast<int>(seed % 30), 0.3, seed);
        std::stringstream buffer;
        write_dimacs(buffer, g, "seed " + std::to_string(seed));
        auto h = read_dimacs(buffer);
        CHECK(h.edges() == g.edges());
        CHECK(h.size() == g.size());

        std::ostringstream again;
        write_dimacs(again, h, "seed " + std::to_string(seed));
        CHECK(again.str() == buffer.str());
    }

    std::ostringstream p3;
    write_dimacs(p3, path_graph(3));
    CHECK(p3.str() == "p edge 3 2\ne 1 2\ne 2 3\n");
}

TEST_CASE("DIMACS files")
{
    auto dir = std::filesystem::temp_directory_path() / "pcn_io_test";
    std::filesystem::create_directories(dir);
    write_dimacs_file(dir / "petersen.col", petersen_graph(), "petersen");
    CHECK(read_dimacs_file(dir / "petersen.col") == petersen_graph());
    try {
        read_dimacs_file(dir / "missing.col");
        FAIL("missing file accepted");
    }
    catch (const Error & e) {
        CHECK(e.kind() == ErrorKind::Io);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("LP model counts")
{
    CHECK(lp_variable_name(0, 1) == "x_1_1");
    CHECK(lp_variable_name(8, 3) == "x_9_3");

    auto p3 = path_graph(3);
    auto dm = all_pairs_distances(p3);
    auto one = export_ilp(p3, dm, {1});
    CHECK(one.binaries.size() == 3);
    CHECK(one.constraints.size() == 3 + 2);

    auto h = generate({3, 2});
    auto hd = all_pairs_distances(h);
    auto hm = export_ilp(h, hd, {1});
    CHECK(hm.binaries.size() == 9);
    CHECK(solve_mss(lp_conflict_graph(hm)).best.size() == 3);

    for (std::uint64_t seed = 0 ; seed < 20 ; ++seed) {
        auto g = random_connected_graph(6 + static_cast<int>(seed % 10), 0.25, seed);
        auto gd = all_pairs_distances(g);
        std::vector<int> layers;
        for (int k = 1 ; k <= gd.diameter() ; k += 1 + static_cast<int>(seed % 2))
            layers.push_back(k);
        std::map<int, CliqueCover> covers;
        std::size_t clique_rows = 0;
        for (int k : layers) {
            covers[k] = clique_cover(g, gd, k);
            clique_rows += covers[k].cliques.size();
        }
        auto model = export_ilp(g, gd, layers, covers);
        const auto n = static_cast<std::size_t>(g.size());
        CHECK(model.binaries.size() == n * layers.size());
        CHECK(model.objective.size() == n * layers.size());
        CHECK(model.constraints.size() == n + clique_rows);
        for (auto & row : model.constraints) {
            CHECK(row.sense == "<=");
            CHECK(row.rhs == 1);
        }
    }
}

TEST_CASE("LP export rejects bad input")
{
    auto p3 = path_graph(3);
    auto dm = all_pairs_distances(p3);
    try {
        export_ilp(p3, dm, {});
        FAIL("empty layer set accepted");
    }
    catch (const Error & e) {
        CHECK(e.kind() == ErrorKind::EmptyLayerSet);
    }

    // Closed neighbourhoods of P_3 are not all cliques of P_3: N[2] = {1, 2, 3}.
    std::map<int, CliqueCover> closed{{1, CliqueCover{1, {{0, 1}, {0, 1, 2}, {1, 2}}}}};
    try {
        export_ilp(p3, dm, {1}, closed);
        FAIL("non-clique row accepted");
    }
    catch (const Error & e) {
        CHECK(e.kind() == ErrorKind::InvalidCover);
    }

    std::map<int, CliqueCover> partial{{1, CliqueCover{1, {{0, 1}}}}};
    CHECK_THROWS_AS(export_ilp(p3, dm, {1}, partial), Error);
    CHECK_THROWS_AS(export_ilp(p3, dm, {1}, {}), Error);
}

TEST_CASE("LP golden files")
{
    const std::filesystem::path data = PCN_TEST_DATA_DIR;
    auto p3 = path_graph(3);
    CHECK(lp_text(p3, {1}, "stable set of path-n3 layered") == slurp(data / "p3_layers_1.lp"));
    CHECK(lp_text(p3, {2}, "stable set of path-n3 layered") == slurp(data / "p3_layers_2.lp"));

    // Deterministic across runs.
    auto g = random_connected_graph(20, 0.2, 5);
    CHECK(lp_text(g, {1, 2, 3}, "x") == lp_text(g, {1, 2, 3}, "x"));
}

TEST_CASE("LP layout")
{
    auto text = lp_text(path_graph(3), {1, 2}, "p3");
    CHECK(text.starts_with("\\ p3\n\\ 6 binaries, 8 constraints\nMaximize\n obj: 1 x_1_1 + 1 x_2_1 + 1 x_3_1 + 1 x_1_2"));
    CHECK(text.find("Subject To\n col_1: 1 x_1_1 + 1 x_1_2 <= 1\n") != std::string::npos);
    CHECK(text.find(" clq_2_2: 1 x_1_2 + 1 x_2_2 + 1 x_3_2 <= 1\n") != std::string::npos);
    CHECK(text.ends_with("Binaries\n x_1_1 x_2_1 x_3_1 x_1_2 x_2_2 x_3_2\nEnd\n"));

    // Long rows wrap.
    auto k = lp_text(complete_graph(10), {1}, "k10");
    CHECK(k.find("\n   ") != std::string::npos);
}

TEST_CASE("LP model and layered graph give the same stability number")
{
    for (std::uint64_t seed = 0 ; seed < 40 ; ++seed) {
        auto g = random_connected_graph(3 + static_cast<int>(seed % 10), 0.3, seed + 17);
        auto dm = all_pairs_distances(g);
        std::vector<int> layers = layer_range(std::max(1, dm.diameter() - 1));
        auto model = export_ilp(g, dm, layers);
        auto conflict = lp_conflict_graph(model);
        auto layered = layered_graph(g, dm, layers, false);
        CHECK(oracle::same_edges(conflict, layered.graph()));
        CHECK(solve_mss(conflict).best.size() == solve_mss(layered.graph()).best.size());
        if (conflict.size() <= 20)
            CHECK(oracle::alpha(conflict) == solve_mss(layered.graph()).best.size());
    }
}

TEST_CASE("colouring files")
{
    PackingColoring c{{1, 2, 1, 3}};
    std::stringstream buffer;
    write_coloring(buffer, c, "cycle-n4");
    CHECK(buffer.str() == "# pcn 3 graph cycle-n4\n1 1\n2 2\n3 1\n4 3\n");
    CHECK(read_coloring(buffer, 4).colours == c.colours);

    std::istringstream gap("1 1\n3 2\n");
    CHECK_THROWS_AS(read_coloring(gap), Error);
    std::istringstream twice("1 1\n1 2\n");
    CHECK_THROWS_AS(read_coloring(twice), Error);
    std::istringstream zero("1 0\n");
    CHECK_THROWS_AS(read_coloring(zero), Error);
    std::istringstream short_file("1 1\n2 2\n");
    CHECK_THROWS_AS(read_coloring(short_file, 3), Error);
    std::istringstream junk("1 1 1\n");
    CHECK_THROWS_AS(read_coloring(junk), Error);
}

TEST_CASE("layered set files")
{
    LayeredStableSet s{{1, 2, 3}, {{0, 1}, {2, 1}, {1, 2}, {LayeredVertex::star, 3}}};
    std::stringstream buffer;
    write_layered_set(buffer, s);
    CHECK(buffer.str() == "# layer 1\n1\n3\n# layer 2\n2\n# layer 3\n*\n");
    auto back = read_layered_set(buffer);
    CHECK(back.layers == s.layers);
    auto sorted = s.members;
    std::ranges::sort(sorted, {}, [] (auto & x) { return std::pair{x.layer, x.vertex}; });
    auto got = back.members;
    std::ranges::sort(got, {}, [] (auto & x) { return std::pair{x.layer, x.vertex}; });
    CHECK(got == sorted);

    std::istringstream orphan("3\n");
    CHECK_THROWS_AS(read_layered_set(orphan), Error);
    std::istringstream bad_header("# level 2\n");
    CHECK_THROWS_AS(read_layered_set(bad_header), Error);
}

TEST_CASE("bounds tables")
{
    CHECK(render_bounds_table({{3, 4, 48, 48, "exact"}}).find(" 4  48  48  exact\n") != std::string::npos);
    CHECK(render_bounds_table({{6, 4, 1041, 1043, "bounds"}}).find(" 4  1041  1043  bounds\n") != std::string::npos);

    auto mixed = render_bounds_table({{3, 4, 48, 48, "exact"}, {6, 4, 1041, 1043, "bounds"}, {11, 4, {}, {}, "skipped"}});
    CHECK(mixed == " q  m    LB    UB  status\n"
                   " 3  4    48    48  exact\n"
                   " 6  4  1041  1043  bounds\n"
                   "11  4     -     -  skipped\n");

    auto empty = render_bounds_table({});
    CHECK(empty == "q  m  LB  UB  status\n");

    CHECK(render_bounds_csv({{3, 4, 45, 48, "bounds"}, {11, 4, {}, {}, "skipped"}})
            == "q,m,lower,upper,status\n3,4,45,48,bounds\n11,4,-,-,skipped\n");
}

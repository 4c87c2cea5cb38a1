// Writes the regression corpus: NAME.pd plus NAME.json with the oracle's
// normalized Alexander polynomial and Arf invariant.
//
//   make_corpus OUT_DIR          prime knots through seven crossings
//   make_corpus OUT_DIR --twist  twist knots with -3..3 full twists

#include <filesystem>
#include <fstream>
#include <iostream>

#include "families.hpp"
#include "oracle.hpp"

namespace fs = std::filesystem;
using namespace kinv;

static void write_entry(const fs::path& dir, const std::string& name, const Diagram& d) {
    Laurent delta = alexander_poly_oracle(d);
    std::ofstream(dir / (name + ".pd")) << emit_pd(d) << "\n";
    json side = {{"name", name}, {"delta", delta.to_json()}, {"delta_text", delta.str()}, {"arf", arf_levine(delta)}};
    std::ofstream(dir / (name + ".json")) << side.dump(2) << "\n";
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: make_corpus OUT_DIR [--twist]\n";
        return 2;
    }
    fs::path dir = argv[1];
    fs::create_directories(dir);
    try {
        if (argc > 2 && std::string(argv[2]) == "--twist") {
            for (int n = -3; n <= 3; ++n)
                write_entry(dir, "twist_" + std::string(n < 0 ? "m" : "") + std::to_string(std::abs(n)), twist_knot(n));
        } else {
            for (const auto& c : rolfsen_dt_codes()) write_entry(dir, c.name, rolfsen(c.name));
        }
    } catch (const Error& e) {
        std::cerr << err_name(e.code) << ": " << e.what() << "\n";
        return 3;
    }
    return 0;
}

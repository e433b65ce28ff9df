// Walks the library through the steps for one group: generate, classes,
// character table, McKay quiver, 3-cycles, cuts. Usage:
//   sample_pipeline [spec.json]      (defaults to the type E group)

#include <iostream>

#include <mckay3/mckay3.hpp>

using namespace mckay3;

int main(int argc, char** argv) {
  try {
    const GroupSpec spec = argc > 1 ? spec_from_json(read_json_file(argv[1])) : exceptional("E");

    const Group g = Group::generate(spec.generators);
    const auto classes = conjugacy_classes(g);
    std::cout << spec.name << ": |G| = " << g.order() << ", " << classes.size() << " classes\n";

    const CharTable table = character_table(g, classes);
    std::cout << "degrees:";
    for (const auto d : degrees(table)) std::cout << " " << d;
    std::cout << "\n";

    const Quiver q = spec.is_type_b()
                         ? gl2_embed(table, block_character(g, table.classes), power_map(g, table.classes, 2))
                         : mckay_quiver(table, defining_character(g, table.classes));
    std::cout << "quiver: " << q.vertex_count() << " vertices, " << q.arrows.size() << " arrows, " << loops(q)
              << " loops, " << three_cycles(q).size() << " 3-cycles\n";
    std::cout << adjacency_csv(q.adjacency());

    const auto cuts = find_cuts(q);
    if (cuts.empty()) {
      std::cout << "no cut\n";
      return 0;
    }
    const CutReport report = verify_cut(q, cuts.front());
    std::cout << "cut:";
    for (auto a : cuts.front()) std::cout << " " << q.arrows[a].source << "->" << q.arrows[a].target;
    std::cout << "\nverified: " << (report.valid ? "yes" : "no") << "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

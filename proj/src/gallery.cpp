#include "fano/gallery.hpp"

#include "fano/errors.hpp"
#include "fano/io.hpp"
#include "fano/twist.hpp"

namespace fano {

EmbeddedGraph torus_grid(int columns, int rows) {
  auto id = [&](int i, int j) { return ((i + columns) % columns) * rows + (j + rows) % rows; };
  auto name = [&](int i, int j) { return "v" + std::to_string(id(i, j)); };
  std::vector<std::string> vertices(columns * rows);
  for (int i = 0; i < columns; ++i) {
    for (int j = 0; j < rows; ++j) vertices[id(i, j)] = name(i, j);
  }
  // Edge 2*id is the horizontal edge leaving v(i,j) to the right, 2*id+1 the
  // vertical edge leaving it upwards.
  std::vector<Edge> edges(2 * columns * rows);
  for (int i = 0; i < columns; ++i) {
    for (int j = 0; j < rows; ++j) {
      edges[2 * id(i, j)] = Edge{name(i, j) + "_" + name(i + 1, j), {id(i, j), id(i + 1, j)}, 1};
      edges[2 * id(i, j) + 1] = Edge{name(i, j) + "_" + name(i, j + 1), {id(i, j), id(i, j + 1)}, 1};
    }
  }
  std::vector<std::vector<HalfEdge>> rotation(columns * rows);
  for (int i = 0; i < columns; ++i) {
    for (int j = 0; j < rows; ++j) {
      rotation[id(i, j)] = {HalfEdge{2 * id(i, j), 0}, HalfEdge{2 * id(i, j) + 1, 0},
                            HalfEdge{2 * id(i - 1, j), 1}, HalfEdge{2 * id(i, j - 1) + 1, 1}};
    }
  }
  return EmbeddedGraph(std::move(vertices), std::move(edges), std::move(rotation));
}

Gem twelve_flag_gem() {
  std::vector<int> v(12), f(12), a(12);
  auto join = [](std::vector<int>& m, int x, int y) {
    m[x] = y;
    m[y] = x;
  };
  for (auto [x, y] : {std::pair{0, 2}, {1, 11}, {10, 6}, {9, 5}, {8, 4}, {7, 3}}) join(f, x, y);
  for (auto [x, y] : {std::pair{0, 1}, {2, 3}, {11, 10}, {9, 8}, {7, 6}, {5, 4}}) join(a, x, y);
  for (auto [x, y] : {std::pair{0, 11}, {2, 1}, {10, 9}, {8, 7}, {6, 5}, {4, 3}}) join(v, x, y);
  std::vector<int> label(12);
  for (int x : {0, 1, 2, 11}) label[x] = 0;
  for (int x : {3, 4, 7, 8}) label[x] = 1;
  for (int x : {5, 6, 9, 10}) label[x] = 2;
  return Gem(std::move(v), std::move(f), std::move(a), std::move(label), {"e0", "e1", "e2"});
}

namespace {

constexpr const char* kPath = R"(
vertex a
vertex b
vertex c
edge ab a b +
edge bc b c +
rot a : ab:0
rot b : ab:1 bc:0
rot c : bc:1
)";

// Disk with antipodal boundary points identified; edges c and d pass through
// the boundary once.
constexpr const char* kProjectiveCircle = R"(
vertex v0
vertex v1
vertex v2
edge a v0 v1 +
edge b v0 v2 +
edge c v0 v1 -
edge d v0 v2 -
rot v0 : b:0 a:0 d:0 c:0
rot v1 : a:1 c:1
rot v2 : b:1 d:1
)";

constexpr const char* kK4Plane = R"(
vertex v0
vertex v1
vertex v2
vertex v3
edge e01 v0 v1 +
edge e02 v0 v2 +
edge e03 v0 v3 +
edge e12 v1 v2 +
edge e13 v1 v3 +
edge e23 v2 v3 +
rot v0 : e01:0 e03:0 e02:0
rot v1 : e13:0 e01:1 e12:0
rot v2 : e12:1 e02:1 e23:0
rot v3 : e23:1 e03:1 e13:1
)";

constexpr const char* kK33Projective = R"(
vertex v0
vertex v1
vertex v2
vertex v3
vertex v4
vertex v5
edge e1 v0 v2 +
edge e2 v0 v4 +
edge e3 v1 v3 +
edge e4 v1 v5 +
edge e5 v2 v3 +
edge e6 v4 v5 +
edge e7 v5 v2 -
edge e8 v4 v3 -
edge e9 v0 v1 -
rot v0 : e2:0 e1:0 e9:0
rot v1 : e9:1 e3:0 e4:0
rot v2 : e5:0 e7:1 e1:1
rot v3 : e3:1 e8:1 e5:1
rot v4 : e6:0 e2:1 e8:0
rot v5 : e7:0 e4:1 e6:1
)";

// Degrees 5 and 1; loop L bounds a face of degree 1, the twisted loop R
// closes a zigzag of degree 1.
constexpr const char* kNoProperty = R"(
vertex v0
vertex v1
edge e v0 v1 +
edge L v1 v1 +
edge R v1 v1 -
rot v0 : e:0
rot v1 : R:1 R:0 L:0 L:1 e:1
)";

constexpr const char* kEulerianBouquet = R"(
vertex v
edge T v v +
edge B v v +
edge D v v -
rot v : T:1 B:1 T:0 D:0 B:0 D:1
)";

EmbeddedGraph twisted_dual_grid() {
  const EmbeddedGraph grid = torus_grid(4, 4);
  const EmbeddedGraph petrie = partial_petrie(grid, {*grid.find_edge("v0_v4")});
  return partial_dual(petrie, {*petrie.find_edge("v9_v10")});
}

std::vector<GalleryEntry> make_gallery() {
  using io::parse_embedding_text;
  const EulerianTriple all{true, true, true};
  std::vector<GalleryEntry> out;
  out.push_back({"torus-grid", "C4 x C4 grid on the torus", torus_grid(4, 4),
                 FanoSet::from_mask(0xFF), all});
  out.push_back({"tree", "path on three vertices in the plane", parse_embedding_text(kPath),
                 FanoSet::of({0, 1, 2, 3}), {false, true, true}});
  {
    const EmbeddedGraph grid = torus_grid(4, 4);
    out.push_back({"twisted-edge-grid", "torus grid with edge v0-v4 twisted",
                   partial_petrie(grid, {*grid.find_edge("v0_v4")}), FanoSet::of({0, 3, 4, 7}),
                   all});
  }
  out.push_back({"projective-circle", "three vertices in the projective plane, two crosscap edges",
                 parse_embedding_text(kProjectiveCircle), FanoSet::of({0, 3, 5, 6}), all});
  out.push_back({"k4-plane", "K4 in the plane", parse_embedding_text(kK4Plane),
                 FanoSet::of({0, 1}), {false, false, true}});
  out.push_back({"k33-projective", "K3,3 in the projective plane",
                 parse_embedding_text(kK33Projective), FanoSet::of({0, 3}), {false, true, true}});
  out.push_back({"twisted-dual-grid", "torus grid, one edge Petrie-twisted and one edge dualized",
                 twisted_dual_grid(), FanoSet::of({0, 7}), all});
  out.push_back({"no-property", "degrees 5 and 1, one twisted loop",
                 parse_embedding_text(kNoProperty), FanoSet::of({0}), {false, false, false}});
  out.push_back({"eulerian-only", "one vertex, three loops, one twisted",
                 parse_embedding_text(kEulerianBouquet), FanoSet::of({0}), all});
  out.push_back({"twelve-flag", "one vertex of degree 6 read off a twelve-flag gem",
                 gem_to_embedding(twelve_flag_gem()), FanoSet::of({0, 2}), {true, true, false}});
  return out;
}

}  // namespace

const std::vector<GalleryEntry>& gallery() {
  static const std::vector<GalleryEntry> entries = make_gallery();
  return entries;
}

const GalleryEntry& gallery_entry(const std::string& name) {
  for (const auto& entry : gallery()) {
    if (entry.name == name) return entry;
  }
  throw InputError("no gallery entry named '" + name + "'");
}

std::vector<GalleryCheck> check_gallery() {
  std::vector<GalleryCheck> out;
  for (const auto& entry : gallery()) {
    GalleryCheck check{entry.name, fano_set(entry.embedding), eulerian_triple(entry.embedding)};
    check.ok = check.fano == entry.expected_fano && check.eulerian == entry.expected_eulerian;
    out.push_back(check);
  }
  return out;
}

}  // namespace fano

#ifndef RELAST_MESH_HPP
#define RELAST_MESH_HPP

#include <array>
#include <string>
#include <vector>

#include "relast/error.hpp"

namespace relast {

enum class FacetTag { Gamma1, Gamma2 };

enum class BoxFace { XMin, XMax, YMin, YMax, ZMin, ZMax };

struct Facet {
  std::array<int, 3> nodes{-1, -1, -1}; // dim entries used
  FacetTag tag = FacetTag::Gamma1;
};

// Simplicial mesh of a chart-box domain: triangles in 2D, tetrahedra in 3D.
// Elements are positively oriented; boundary facets are faces of exactly one
// element and carry a gamma1/gamma2 tag.
struct Mesh {
  int dim = 2;
  std::vector<double> nodes;        // n_nodes * dim, lexicographic generation order
  std::vector<int> elements;        // n_elements * (dim+1)
  std::vector<Facet> boundary_facets;

  int n_nodes() const { return static_cast<int>(nodes.size()) / dim; }
  int n_elements() const { return static_cast<int>(elements.size()) / (dim + 1); }
  int nodes_per_element() const { return dim + 1; }

  const double* node(int a) const { return nodes.data() + static_cast<std::size_t>(a) * dim; }
  const int* element(int e) const { return elements.data() + static_cast<std::size_t>(e) * (dim + 1); }

  double element_volume(int e) const;   // chart-coordinate volume
  double max_diameter() const;          // h, max edge length over elements

  // true if the node lies on some gamma1-tagged facet
  std::vector<bool> gamma1_node_mask() const;

  bool all_gamma1() const;

  // Checks orientation, facet incidence, and tag coverage; throws on failure.
  void validate() const;
};

// Structured simplicial mesh of the box [box[0],box[1]] x ... with the given
// per-axis cell counts; 2 triangles per quad, 6 tetrahedra per cube, fixed
// diagonal convention; node ordering lexicographic (x fastest).
// Facets on faces listed in gamma2_faces are tagged gamma2, all others gamma1.
Mesh generate_mesh(int dim, const std::vector<double>& box, const std::vector<int>& resolution,
                   const std::vector<BoxFace>& gamma2_faces = {});

const char* facet_tag_name(FacetTag tag);
const char* box_face_name(BoxFace face);

} // namespace relast

#endif

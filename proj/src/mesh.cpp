#include "relast/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace relast {

const char* facet_tag_name(FacetTag tag) { return tag == FacetTag::Gamma1 ? "gamma1" : "gamma2"; }

const char* box_face_name(BoxFace face) {
  switch (face) {
    case BoxFace::XMin: return "xmin";
    case BoxFace::XMax: return "xmax";
    case BoxFace::YMin: return "ymin";
    case BoxFace::YMax: return "ymax";
    case BoxFace::ZMin: return "zmin";
    case BoxFace::ZMax: return "zmax";
  }
  return "?";
}

double Mesh::element_volume(int e) const {
  const int* el = element(e);
  const double* p0 = node(el[0]);
  if (dim == 2) {
    const double* p1 = node(el[1]);
    const double* p2 = node(el[2]);
    return 0.5 * ((p1[0] - p0[0]) * (p2[1] - p0[1]) - (p2[0] - p0[0]) * (p1[1] - p0[1]));
  }
  double m[9];
  for (int k = 0; k < 3; ++k) {
    const double* pk = node(el[k + 1]);
    for (int i = 0; i < 3; ++i) m[k * 3 + i] = pk[i] - p0[i];
  }
  const double det = m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
                     m[2] * (m[3] * m[7] - m[4] * m[6]);
  return det / 6.0;
}

double Mesh::max_diameter() const {
  double h = 0.0;
  const int npe = nodes_per_element();
  for (int e = 0; e < n_elements(); ++e) {
    const int* el = element(e);
    for (int a = 0; a < npe; ++a)
      for (int b = a + 1; b < npe; ++b) {
        double s = 0.0;
        for (int i = 0; i < dim; ++i) {
          const double dx = node(el[a])[i] - node(el[b])[i];
          s += dx * dx;
        }
        h = std::max(h, std::sqrt(s));
      }
  }
  return h;
}

std::vector<bool> Mesh::gamma1_node_mask() const {
  std::vector<bool> mask(static_cast<std::size_t>(n_nodes()), false);
  for (const Facet& f : boundary_facets)
    if (f.tag == FacetTag::Gamma1)
      for (int k = 0; k < dim; ++k) mask[static_cast<std::size_t>(f.nodes[static_cast<std::size_t>(k)])] = true;
  return mask;
}

bool Mesh::all_gamma1() const {
  for (const Facet& f : boundary_facets)
    if (f.tag != FacetTag::Gamma1) return false;
  return true;
}

void Mesh::validate() const {
  if (dim != 2 && dim != 3) fail(ErrorKind::MeshFormat, "mesh dim must be 2 or 3");
  const int nn = n_nodes();
  for (int e = 0; e < n_elements(); ++e) {
    const int* el = element(e);
    for (int k = 0; k <= dim; ++k)
      if (el[k] < 0 || el[k] >= nn) fail(ErrorKind::MeshFormat, "element node index out of range");
    if (!(element_volume(e) > 0.0)) fail(ErrorKind::MeshFormat, "element with non-positive volume");
  }

  // each boundary facet must be a face of exactly one element
  std::map<std::vector<int>, int> face_count;
  for (int e = 0; e < n_elements(); ++e) {
    const int* el = element(e);
    for (int drop = 0; drop <= dim; ++drop) {
      std::vector<int> face;
      for (int k = 0; k <= dim; ++k)
        if (k != drop) face.push_back(el[k]);
      std::sort(face.begin(), face.end());
      face_count[face] += 1;
    }
  }
  for (const Facet& f : boundary_facets) {
    std::vector<int> key;
    for (int k = 0; k < dim; ++k) {
      if (f.nodes[static_cast<std::size_t>(k)] < 0 || f.nodes[static_cast<std::size_t>(k)] >= nn)
        fail(ErrorKind::MeshFormat, "facet node index out of range");
      key.push_back(f.nodes[static_cast<std::size_t>(k)]);
    }
    std::sort(key.begin(), key.end());
    auto it = face_count.find(key);
    if (it == face_count.end() || it->second != 1)
      fail(ErrorKind::MeshFormat, "boundary facet is not a face of exactly one element");
  }

  // tags must cover the whole boundary
  std::size_t n_boundary_faces = 0;
  for (const auto& [face, count] : face_count)
    if (count == 1) ++n_boundary_faces;
  if (n_boundary_faces != boundary_facets.size())
    fail(ErrorKind::MeshFormat, "boundary facets do not cover the whole boundary");
}

namespace {

// all 6 permutations of (0,1,2) for the Kuhn tetrahedral decomposition
constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

} // namespace

Mesh generate_mesh(int dim, const std::vector<double>& box, const std::vector<int>& resolution,
                   const std::vector<BoxFace>& gamma2_faces) {
  if (dim != 2 && dim != 3) fail(ErrorKind::Dimension, "generate_mesh: dim must be 2 or 3");
  if (static_cast<int>(box.size()) != 2 * dim) fail(ErrorKind::Dimension, "generate_mesh: box needs 2*dim bounds");
  if (static_cast<int>(resolution.size()) != dim)
    fail(ErrorKind::Dimension, "generate_mesh: resolution needs dim entries");
  for (int i = 0; i < dim; ++i) {
    if (resolution[static_cast<std::size_t>(i)] < 1) fail(ErrorKind::Dimension, "generate_mesh: resolution must be >= 1");
    if (!(box[static_cast<std::size_t>(2 * i + 1)] > box[static_cast<std::size_t>(2 * i)]))
      fail(ErrorKind::Dimension, "generate_mesh: empty box");
  }

  auto tagged = [&](BoxFace f) {
    return std::find(gamma2_faces.begin(), gamma2_faces.end(), f) != gamma2_faces.end();
  };

  Mesh mesh;
  mesh.dim = dim;

  const int nx = resolution[0];
  const int ny = resolution[1];
  const int nz = dim == 3 ? resolution[2] : 1;
  const double x0 = box[0], x1 = box[1];
  const double y0 = box[2], y1 = box[3];
  const double z0 = dim == 3 ? box[4] : 0.0, z1 = dim == 3 ? box[5] : 0.0;

  if (dim == 2) {
    auto vid = [&](int i, int j) { return j * (nx + 1) + i; };
    for (int j = 0; j <= ny; ++j)
      for (int i = 0; i <= nx; ++i) {
        mesh.nodes.push_back(x0 + (x1 - x0) * i / nx);
        mesh.nodes.push_back(y0 + (y1 - y0) * j / ny);
      }
    // diagonal from (i,j) to (i+1,j+1); both triangles counterclockwise
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        const int v00 = vid(i, j), v10 = vid(i + 1, j), v01 = vid(i, j + 1), v11 = vid(i + 1, j + 1);
        mesh.elements.insert(mesh.elements.end(), {v00, v10, v11});
        mesh.elements.insert(mesh.elements.end(), {v00, v11, v01});
      }
    auto add_facet = [&](int a, int b, BoxFace face) {
      Facet f;
      f.nodes[0] = a;
      f.nodes[1] = b;
      f.tag = tagged(face) ? FacetTag::Gamma2 : FacetTag::Gamma1;
      mesh.boundary_facets.push_back(f);
    };
    for (int i = 0; i < nx; ++i) add_facet(vid(i, 0), vid(i + 1, 0), BoxFace::YMin);
    for (int j = 0; j < ny; ++j) add_facet(vid(nx, j), vid(nx, j + 1), BoxFace::XMax);
    for (int i = 0; i < nx; ++i) add_facet(vid(i + 1, ny), vid(i, ny), BoxFace::YMax);
    for (int j = 0; j < ny; ++j) add_facet(vid(0, j + 1), vid(0, j), BoxFace::XMin);
  } else {
    auto vid = [&](int i, int j, int k) { return (k * (ny + 1) + j) * (nx + 1) + i; };
    for (int k = 0; k <= nz; ++k)
      for (int j = 0; j <= ny; ++j)
        for (int i = 0; i <= nx; ++i) {
          mesh.nodes.push_back(x0 + (x1 - x0) * i / nx);
          mesh.nodes.push_back(y0 + (y1 - y0) * j / ny);
          mesh.nodes.push_back(z0 + (z1 - z0) * k / nz);
        }
    // Kuhn decomposition: 6 tetrahedra per cube sharing the main diagonal
    for (int k = 0; k < nz; ++k)
      for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
          for (const auto& perm : kPerms) {
            int corner[3] = {0, 0, 0};
            int verts[4];
            verts[0] = vid(i, j, k);
            for (int s = 0; s < 3; ++s) {
              corner[perm[s]] = 1;
              verts[s + 1] = vid(i + corner[0], j + corner[1], k + corner[2]);
            }
            mesh.elements.insert(mesh.elements.end(), {verts[0], verts[1], verts[2], verts[3]});
            const int e = mesh.n_elements() - 1;
            if (mesh.element_volume(e) < 0.0)
              std::swap(mesh.elements[static_cast<std::size_t>(e * 4 + 2)],
                        mesh.elements[static_cast<std::size_t>(e * 4 + 3)]);
          }
        }
    // boundary facets: element faces whose nodes all lie on one box face,
    // detected through exact grid indices
    auto on_face = [&](int v, BoxFace face) {
      const int i = v % (nx + 1);
      const int j = (v / (nx + 1)) % (ny + 1);
      const int k = v / ((nx + 1) * (ny + 1));
      switch (face) {
        case BoxFace::XMin: return i == 0;
        case BoxFace::XMax: return i == nx;
        case BoxFace::YMin: return j == 0;
        case BoxFace::YMax: return j == ny;
        case BoxFace::ZMin: return k == 0;
        case BoxFace::ZMax: return k == nz;
      }
      return false;
    };
    const BoxFace faces[6] = {BoxFace::XMin, BoxFace::XMax, BoxFace::YMin,
                              BoxFace::YMax, BoxFace::ZMin, BoxFace::ZMax};
    std::map<std::vector<int>, int> seen;
    for (int e = 0; e < mesh.n_elements(); ++e) {
      const int* el = mesh.element(e);
      for (int drop = 0; drop < 4; ++drop) {
        int tri[3];
        int t = 0;
        for (int s = 0; s < 4; ++s)
          if (s != drop) tri[t++] = el[s];
        for (BoxFace face : faces) {
          if (on_face(tri[0], face) && on_face(tri[1], face) && on_face(tri[2], face)) {
            std::vector<int> key = {tri[0], tri[1], tri[2]};
            std::sort(key.begin(), key.end());
            if (seen.emplace(key, e).second) {
              Facet f;
              f.nodes = {tri[0], tri[1], tri[2]};
              f.tag = tagged(face) ? FacetTag::Gamma2 : FacetTag::Gamma1;
              mesh.boundary_facets.push_back(f);
            }
            break;
          }
        }
      }
    }
  }
  return mesh;
}

} // namespace relast

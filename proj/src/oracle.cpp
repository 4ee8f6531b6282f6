#include "vrpath/oracle.hpp"

#include <algorithm>
#include <map>

namespace vrpath {

namespace {

typedef std::vector<std::vector<uint8_t>> f2_matrix; // row-major

size_t f2_rank(f2_matrix m) {
	size_t rank = 0;
	if (m.empty()) return 0;
	size_t cols = m[0].size();
	for (size_t col = 0; col < cols && rank < m.size(); ++col) {
		size_t pivot = rank;
		while (pivot < m.size() && !m[pivot][col]) ++pivot;
		if (pivot == m.size()) continue;
		std::swap(m[rank], m[pivot]);
		for (size_t r = 0; r < m.size(); ++r)
			if (r != rank && m[r][col])
				for (size_t c = col; c < cols; ++c) m[r][c] ^= m[rank][c];
		++rank;
	}
	return rank;
}

// Basis of the null space of m (vectors over the column index set).
std::vector<std::vector<uint8_t>> f2_kernel_basis(f2_matrix m, size_t cols) {
	std::vector<size_t> pivot_col;
	size_t rank = 0;
	for (size_t col = 0; col < cols && rank < m.size(); ++col) {
		size_t pivot = rank;
		while (pivot < m.size() && !m[pivot][col]) ++pivot;
		if (pivot == m.size()) continue;
		std::swap(m[rank], m[pivot]);
		for (size_t r = 0; r < m.size(); ++r)
			if (r != rank && m[r][col])
				for (size_t c = 0; c < cols; ++c) m[r][c] ^= m[rank][c];
		pivot_col.push_back(col);
		++rank;
	}
	std::vector<uint8_t> is_pivot(cols, 0);
	for (size_t c : pivot_col) is_pivot[c] = 1;
	std::vector<std::vector<uint8_t>> basis;
	for (size_t free = 0; free < cols; ++free) {
		if (is_pivot[free]) continue;
		std::vector<uint8_t> vec(cols, 0);
		vec[free] = 1;
		for (size_t r = 0; r < rank; ++r)
			if (m[r][free]) vec[pivot_col[r]] = 1;
		basis.push_back(std::move(vec));
	}
	return basis;
}

std::vector<std::vector<index_t>> simplices_of_dim(const explicit_complex& x, int dim) {
	std::vector<std::vector<index_t>> out;
	for (const auto& s : x.simplices)
		if (static_cast<int>(s.size()) == dim + 1) out.push_back(s);
	std::sort(out.begin(), out.end());
	return out;
}

// Boundary matrix with rows indexed by faces, columns by simplices of dim.
f2_matrix boundary_matrix(const std::vector<std::vector<index_t>>& faces,
                          const std::vector<std::vector<index_t>>& simps) {
	std::map<std::vector<index_t>, size_t> face_index;
	for (size_t i = 0; i < faces.size(); ++i) face_index[faces[i]] = i;
	f2_matrix m(faces.size(), std::vector<uint8_t>(simps.size(), 0));
	for (size_t c = 0; c < simps.size(); ++c) {
		const auto& s = simps[c];
		if (s.size() < 2) continue;
		std::vector<index_t> face(s.size() - 1);
		for (size_t p = 0; p < s.size(); ++p) {
			size_t q = 0;
			for (size_t r = 0; r < s.size(); ++r)
				if (r != p) face[q++] = s[r];
			m[face_index.at(face)][c] = 1;
		}
	}
	return m;
}

f2_matrix transpose(const f2_matrix& m, size_t cols) {
	f2_matrix t(cols, std::vector<uint8_t>(m.size(), 0));
	for (size_t r = 0; r < m.size(); ++r)
		for (size_t c = 0; c < cols; ++c)
			if (m[r][c]) t[c][r] = 1;
	return t;
}

} // namespace

size_t explicit_complex::count_dim(int dim) const {
	size_t n = 0;
	for (const auto& s : simplices)
		if (static_cast<int>(s.size()) == dim + 1) ++n;
	return n;
}

bool explicit_complex::contains(const std::vector<index_t>& s) const {
	return std::binary_search(simplices.begin(), simplices.end(), s,
	                          [](const auto& a, const auto& b) {
		                          return std::make_pair(a.size(), a) < std::make_pair(b.size(), b);
	                          });
}

bool explicit_complex::subcomplex_of(const explicit_complex& other) const {
	for (const auto& s : simplices)
		if (!other.contains(s)) return false;
	return true;
}

explicit_complex make_complex(std::vector<std::vector<index_t>> simplices) {
	for (auto& s : simplices) {
		if (s.empty()) throw validation_error("complex: empty simplex");
		std::sort(s.begin(), s.end());
		if (std::adjacent_find(s.begin(), s.end()) != s.end())
			throw validation_error("complex: repeated vertex in simplex");
	}
	std::sort(simplices.begin(), simplices.end(), [](const auto& a, const auto& b) {
		return std::make_pair(a.size(), a) < std::make_pair(b.size(), b);
	});
	simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
	explicit_complex x{std::move(simplices)};
	validate_closure(x);
	return x;
}

void validate_closure(const explicit_complex& x) {
	for (const auto& s : x.simplices) {
		if (s.size() < 2) continue;
		std::vector<index_t> face(s.size() - 1);
		for (size_t p = 0; p < s.size(); ++p) {
			size_t q = 0;
			for (size_t r = 0; r < s.size(); ++r)
				if (r != p) face[q++] = s[r];
			if (!x.contains(face)) throw validation_error("complex: not closed under faces");
		}
	}
}

explicit_complex oracle_clique_complex(size_t n_vertices, const std::set<std::pair<index_t, index_t>>& edges,
                                       int max_simplex_dim) {
	std::vector<std::vector<index_t>> simplices;
	// subset scan over vertex bitmasks
	if (n_vertices > 20) throw validation_error("oracle clique complex: too many vertices");
	for (uint32_t mask = 1; mask < (1u << n_vertices); ++mask) {
		int size = __builtin_popcount(mask);
		if (size > max_simplex_dim + 1) continue;
		std::vector<index_t> verts;
		for (size_t v = 0; v < n_vertices; ++v)
			if (mask & (1u << v)) verts.push_back(v);
		bool clique = true;
		for (size_t a = 0; a < verts.size() && clique; ++a)
			for (size_t b = a + 1; b < verts.size() && clique; ++b)
				if (!edges.count({verts[a], verts[b]})) clique = false;
		if (clique) simplices.push_back(std::move(verts));
	}
	return make_complex(std::move(simplices));
}

size_t oracle_betti(const explicit_complex& x, int ell) {
	validate_closure(x);
	auto simps = simplices_of_dim(x, ell);
	if (simps.empty()) return 0;
	auto faces = simplices_of_dim(x, ell - 1);
	auto cofaces = simplices_of_dim(x, ell + 1);
	size_t rank_low = ell == 0 ? 0 : f2_rank(boundary_matrix(faces, simps));
	size_t rank_high = f2_rank(boundary_matrix(simps, cofaces));
	return simps.size() - rank_low - rank_high;
}

size_t inclusion_rank(const explicit_complex& sub, const explicit_complex& sup, int ell) {
	if (!sub.subcomplex_of(sup)) throw validation_error("inclusion_rank: not a subcomplex");
	auto sup_simps = simplices_of_dim(sup, ell);
	if (sup_simps.empty()) return 0;
	auto sub_simps = simplices_of_dim(sub, ell);
	if (sub_simps.empty()) return 0;

	// cycles of sub, expressed in sub coordinates
	auto sub_faces = simplices_of_dim(sub, ell - 1);
	std::vector<std::vector<uint8_t>> kernel;
	if (ell == 0) {
		for (size_t i = 0; i < sub_simps.size(); ++i) {
			std::vector<uint8_t> v(sub_simps.size(), 0);
			v[i] = 1;
			kernel.push_back(std::move(v));
		}
	} else {
		kernel = f2_kernel_basis(boundary_matrix(sub_faces, sub_simps), sub_simps.size());
	}
	if (kernel.empty()) return 0;

	// embed into sup coordinates
	std::map<std::vector<index_t>, size_t> sup_index;
	for (size_t i = 0; i < sup_simps.size(); ++i) sup_index[sup_simps[i]] = i;
	f2_matrix z_rows;
	for (const auto& vec : kernel) {
		std::vector<uint8_t> row(sup_simps.size(), 0);
		for (size_t i = 0; i < vec.size(); ++i)
			if (vec[i]) row[sup_index.at(sub_simps[i])] = 1;
		z_rows.push_back(std::move(row));
	}
	size_t dim_z = f2_rank(z_rows);

	// boundaries of sup as row vectors
	auto sup_cofaces = simplices_of_dim(sup, ell + 1);
	f2_matrix b_rows = transpose(boundary_matrix(sup_simps, sup_cofaces), sup_cofaces.size());
	size_t dim_b = f2_rank(b_rows);

	f2_matrix joint = z_rows;
	joint.insert(joint.end(), b_rows.begin(), b_rows.end());
	size_t dim_sum = f2_rank(joint);

	// rank of the induced map: dim Z - dim(Z intersect B) = dim(Z + B) - dim B
	(void)dim_z;
	return dim_sum - dim_b;
}

std::vector<oracle_bar> barcode_from_filtration(const std::vector<explicit_complex>& chain,
                                                int ell) {
	const size_t m = chain.size();
	if (m == 0) return {};
	for (size_t i = 0; i + 1 < m; ++i)
		if (!chain[i].subcomplex_of(chain[i + 1]))
			throw validation_error("barcode_from_filtration: chain not nested at step " +
			                       std::to_string(i + 1));

	// r(i, j) = rank of H_ell(X_i) -> H_ell(X_j), 1-based; r(0, .) = 0,
	// r(., m+1) = 0 encodes death at infinity.
	auto r = [&](size_t i, size_t j) -> int64_t {
		if (i == 0 || j > m) return 0;
		return static_cast<int64_t>(inclusion_rank(chain[i - 1], chain[j - 1], ell));
	};

	std::vector<oracle_bar> bars;
	for (size_t i = 1; i <= m; ++i)
		for (size_t j = i + 1; j <= m + 1; ++j) {
			int64_t mult = r(i, j - 1) - r(i, j) - r(i - 1, j - 1) + r(i - 1, j);
			if (mult < 0)
				throw validation_error("barcode_from_filtration: negative multiplicity");
			for (int64_t t = 0; t < mult; ++t)
				bars.push_back({static_cast<index_t>(i),
				                j == m + 1 ? index_t{-1} : static_cast<index_t>(j)});
		}
	std::sort(bars.begin(), bars.end());
	return bars;
}

} // namespace vrpath

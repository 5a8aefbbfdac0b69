#pragma once

#include <string>
#include <vector>

#include "chiralwalk/hermitian.hpp"
#include "chiralwalk/time_symmetry.hpp"

namespace chiralwalk {

/// On-disk shape of a matrix: one record per stored entry. For Hermitian
/// input the conjugate of each off-diagonal record is implied; a pair may
/// also be given explicitly from both sides, in which case the two records
/// must agree as conjugates within the hermiticity tolerance.
struct HamiltonianDocument {
  struct Entry {
    int row = 0;
    int col = 0;
    double re = 0.0;
    double im = 0.0;
  };
  int dim = 0;
  std::string name;  // empty when absent
  std::vector<Entry> entries;
};

enum class DocumentFormat { Json, EdgeList };

/// JSON object {"name"?, "dim", "entries": [[row, col, re, im], ...]}.
/// Structural problems throw ParseError.
HamiltonianDocument parse_document_json(const std::string& text);

/// Whitespace records `row col re im`, one per line, `#` comments; the
/// dimension is inferred as max index + 1.
HamiltonianDocument parse_document_edgelist(const std::string& text);

HamiltonianDocument parse_document(const std::string& text,
                                   DocumentFormat format);

/// Dense matrix with implied conjugates filled in. Semantic problems
/// (indices out of range, duplicate ordered records) throw ValidationError.
Eigen::MatrixXcd document_matrix(const HamiltonianDocument& doc);

/// Same placement with no implied entries; records must be real.
Eigen::MatrixXd document_real_matrix(const HamiltonianDocument& doc);

/// Convenience: document -> validated Hermitian matrix.
HermitianMatrix document_hermitian(const HamiltonianDocument& doc,
                                   const Tolerances& tol = {});

/// Upper-triangle records (row <= col) of the exactly nonzero entries.
HamiltonianDocument document_from_matrix(const Eigen::MatrixXcd& m,
                                         std::string name = {});

/// Deterministic two-space-indented JSON, trailing newline.
std::string document_to_json(const HamiltonianDocument& doc);

}  // namespace chiralwalk

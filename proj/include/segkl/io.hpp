#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "segkl/comparison.hpp"
#include "segkl/functors.hpp"
#include "segkl/kgroup.hpp"
#include "segkl/multisegment.hpp"
#include "segkl/ratmat.hpp"
#include "segkl/vogan.hpp"

namespace segkl {

using Json = nlohmann::ordered_json;

/* Rationals travel as [numerator, denominator] with a positive canonical
 * denominator; parsers also accept a bare integer.  All emitters order
 * their output canonically so equal inputs give byte-equal output. */
Json rat_json(const Rat& x);
Rat rat_from_json(const Json& j);

Json segment_json(const Segment& s);            // {"a":[n,d],"b":[n,d]}
Segment segment_from_json(const Json& j);

Json multisegment_json(const Multisegment& m);  // {"segments":[...]}
Multisegment multisegment_from_json(const Json& j);

Json weight_json(const WeightFunction& phi);    // {"values":[[[n,d],count],...]}
WeightFunction weight_from_json(const Json& j);

// {"dims": WeightFunction, "blocks": [[degree, [[rational,...],...]], ...]}
Json graded_op_json(const GradedOperator& T);
GradedOperator graded_op_from_json(const Json& j);

/* {"basis": name, "terms": [[label, coeff], ...]}; labels are multisegment
 * objects for the p-adic bases and one-line permutation codes for the real
 * ones. */
Json kelement_json(const KElement& e);
KElement kelement_from_json(const Json& j);

Perm perm_from_code(const std::string& code);

std::string matrix_csv(const Mat& m);

/* Closure poset plumbing: the list of orbits of phi in canonical order,
 * the covering relations of the closure order (edges point from the
 * smaller orbit to the one whose closure swallows it), and a DOT digraph
 * with one edge per covering relation. */
std::vector<std::pair<int, int>> covering_edges(const std::vector<Multisegment>& orbits);
std::string poset_dot(const std::vector<Multisegment>& orbits,
                      const std::vector<std::pair<int, int>>& edges);

// Full dictionary of a matched block: parameters, parabolics, labels with
// both dimension counts, and the orbit bijection.
Json block_json(const ComparisonBlock& b);

Json report_json(const DiagramReport& r);

Json read_json_file(const std::string& path);  // throws std::invalid_argument
void write_text_file(const std::string& path, const std::string& text);

}  // namespace segkl

#pragma once

#include <string>

#include "framecal/frame.hpp"
#include "framecal/linalg.hpp"

namespace framecal {

// Frame documents:
//   {"dim": n, "atoms": [{"label": ..., "weight": ..., "vector":
//    [[re, im], ...]}, ...]}
// Complex entries serialize as [re, im] pairs. Doubles are written as
// decimals with 17 significant digits, so finite values round-trip
// bit-exactly through serialize/parse. Anything wrong with a document
// (bad JSON, missing fields, non-positive weights, mismatched vector
// lengths, duplicate labels) raises ParseError.
SampledFrame parse_frame(const std::string& text);
std::string serialize_frame(const SampledFrame& f);
SampledFrame load_frame(const std::string& path);
void save_frame(const SampledFrame& f, const std::string& path);

// Operator documents: {"dim": n, "entries": [[[re, im], ...], ...]} with
// one inner list per matrix row, in row-major order.
LinearOperator parse_operator(const std::string& text);
std::string serialize_operator(const LinearOperator& a);
LinearOperator load_operator(const std::string& path);
void save_operator(const LinearOperator& a, const std::string& path);

// Entire contents of a file as bytes; ParseError when unreadable.
std::string read_text_file(const std::string& path);

// 64-bit FNV-1a digest as 16 lowercase hex characters; fingerprints report
// inputs.
std::string fnv1a_digest(const std::string& data);

// Decimal form of a finite double with 17 significant digits (printf %.17g);
// parses back to the identical bit pattern. Raises ParseError on non-finite
// input.
std::string format_double(double x);

}  // namespace framecal

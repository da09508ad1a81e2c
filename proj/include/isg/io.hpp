// Semigroup document serialization. A document is a single JSON object
// with keys (version, order, table, zero, identity, names, labels); the
// exact format is described in docs/format.md. Round trips are
// byte-identical for stored documents.

#ifndef ISG_IO_HPP_
#define ISG_IO_HPP_

#include <iosfwd>
#include <string>

#include "isg/semigroup.hpp"

namespace isg {

inline constexpr int kDocumentVersion = 1;

// Parses and validates a document: shape, entry ranges, associativity,
// marker validity. A zero marker not at index 0 is normalized there by
// swapping element indices.
FiniteSemigroup document_to_semigroup(const std::string& text);

std::string semigroup_to_document(const FiniteSemigroup& s);

// path "-" means standard input / output.
FiniteSemigroup load_semigroup(const std::string& path);
void store_semigroup(const FiniteSemigroup& s, const std::string& path);

// FNV-1a hash of the stored document, as fixed-width hex.
std::string document_digest(const FiniteSemigroup& s);

}  // namespace isg

#endif  // ISG_IO_HPP_

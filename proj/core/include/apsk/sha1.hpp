#ifndef APSK_SHA1_HPP
#define APSK_SHA1_HPP

#include <string>
#include <string_view>

namespace apsk {

// Lowercase hex SHA-1 digest of the bytes.
std::string sha1_hex(std::string_view data);

// Git-blob-style content hash: sha1("blob <len>\0" + data). Used to tag
// output files with the exact config that produced them.
std::string git_blob_sha1(std::string_view data);

} // namespace apsk

#endif

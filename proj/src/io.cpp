/*
 * Copyright (C) 2026 The Dronecrypt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "dronecrypt/io.hpp"

#include <cstdio>

#if defined(_WIN32)
#include <io.h>
#else
#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>
#endif

namespace dronecrypt {

Bytes read_file(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw Error("cannot open " + path);
  Bytes data;
  uint8_t buf[65536];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) data.insert(data.end(), buf, buf + n);
  bool bad = std::ferror(f);
  std::fclose(f);
  if (bad) throw Error("read error on " + path);
  return data;
}

void write_file(const std::string& path, BytesView data, bool private_mode) {
#if defined(_WIN32)
  // Windows has no POSIX mode bits; documented as best effort there.
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw Error("cannot create " + path);
#else
  int flags = O_WRONLY | O_CREAT | O_TRUNC;
  mode_t mode = private_mode ? 0600 : 0644;
  int fd = ::open(path.c_str(), flags, mode);
  if (fd < 0) throw Error("cannot create " + path);
  if (private_mode) ::fchmod(fd, 0600);  // in case the file pre-existed
  std::FILE* f = ::fdopen(fd, "wb");
  if (!f) {
    ::close(fd);
    throw Error("cannot create " + path);
  }
#endif
  size_t n = data.empty() ? 0 : std::fwrite(data.data(), 1, data.size(), f);
  bool bad = n != data.size() || std::fflush(f) != 0;
  std::fclose(f);
  if (bad) throw Error("write error on " + path);
}

}  // namespace dronecrypt

// Copyright (c) 2026 The TrapForge Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trapforge/image_io.hpp"

#include <jpeglib.h>
#include <png.h>

#include <csetjmp>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "trapforge/error.hpp"

namespace trapforge {

namespace {

// Buffers live in malloc storage and the pointers are volatile so their
// values survive the longjmp taken by the libpng/libjpeg error handlers.

class FileHandle {
 public:
  explicit FileHandle(const std::filesystem::path& path, const char* mode)
      : fp_(std::fopen(path.string().c_str(), mode)) {}
  ~FileHandle() {
    if (fp_) std::fclose(fp_);
  }
  FileHandle(const FileHandle&) = delete;
  FileHandle& operator=(const FileHandle&) = delete;
  FILE* get() const { return fp_; }

 private:
  FILE* fp_;
};

ImageBuffer load_png_file(FILE* fp, const std::filesystem::path& path) {
  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  require(png != nullptr, "libpng initialization failed");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    fail("libpng initialization failed");
  }

  std::uint8_t* volatile data = nullptr;
  png_bytep* volatile rows = nullptr;
  if (setjmp(png_jmpbuf(png))) {
    std::free(data);
    std::free(rows);
    png_destroy_read_struct(&png, &info, nullptr);
    fail("cannot decode PNG ", path.string());
  }

  png_init_io(png, fp);
  png_read_info(png, info);

  png_uint_32 width = 0;
  png_uint_32 height = 0;
  int bit_depth = 0;
  int color_type = 0;
  png_get_IHDR(png, info, &width, &height, &bit_depth, &color_type, nullptr,
               nullptr, nullptr);

  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
  }
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (bit_depth == 16) png_set_strip_16(png);
  png_set_strip_alpha(png);
  png_read_update_info(png, info);

  const int channels = png_get_channels(png, info);
  if (channels != 1 && channels != 3) {
    std::longjmp(png_jmpbuf(png), 1);
  }
  const std::size_t row_bytes = png_get_rowbytes(png, info);
  data = static_cast<std::uint8_t*>(std::malloc(row_bytes * height));
  rows = static_cast<png_bytep*>(std::malloc(sizeof(png_bytep) * height));
  if (data == nullptr || rows == nullptr) std::longjmp(png_jmpbuf(png), 1);
  for (png_uint_32 y = 0; y < height; ++y) rows[y] = data + y * row_bytes;

  png_read_image(png, rows);
  png_read_end(png, nullptr);

  ImageBuffer img = ImageBuffer::create(static_cast<int>(width),
                                        static_cast<int>(height), channels);
  for (png_uint_32 y = 0; y < height; ++y) {
    std::memcpy(&img.pixels[static_cast<std::size_t>(y) * width * channels],
                rows[y], static_cast<std::size_t>(width) * channels);
  }
  std::free(data);
  std::free(rows);
  png_destroy_read_struct(&png, &info, nullptr);
  return img;
}

struct JpegErrorMgr {
  jpeg_error_mgr pub;
  std::jmp_buf jump;
};

void jpeg_error_exit(j_common_ptr cinfo) {
  JpegErrorMgr* mgr = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
  std::longjmp(mgr->jump, 1);
}

ImageBuffer load_jpeg_file(FILE* fp, const std::filesystem::path& path) {
  jpeg_decompress_struct cinfo;
  JpegErrorMgr err;
  cinfo.err = jpeg_std_error(&err.pub);
  err.pub.error_exit = jpeg_error_exit;

  std::uint8_t* volatile data = nullptr;
  if (setjmp(err.jump)) {
    std::free(data);
    jpeg_destroy_decompress(&cinfo);
    fail("cannot decode JPEG ", path.string());
  }

  jpeg_create_decompress(&cinfo);
  jpeg_stdio_src(&cinfo, fp);
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space =
      cinfo.num_components == 1 ? JCS_GRAYSCALE : JCS_RGB;
  jpeg_start_decompress(&cinfo);

  const int width = static_cast<int>(cinfo.output_width);
  const int height = static_cast<int>(cinfo.output_height);
  const int channels = cinfo.output_components;
  if (channels != 1 && channels != 3) std::longjmp(err.jump, 1);
  const std::size_t row_bytes = static_cast<std::size_t>(width) * channels;
  data = static_cast<std::uint8_t*>(std::malloc(row_bytes * height));
  if (data == nullptr) std::longjmp(err.jump, 1);

  while (cinfo.output_scanline < cinfo.output_height) {
    JSAMPROW row = data + static_cast<std::size_t>(cinfo.output_scanline) *
                              row_bytes;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_decompress(&cinfo);

  ImageBuffer img = ImageBuffer::create(width, height, channels);
  std::memcpy(img.pixels.data(), data, row_bytes * height);
  std::free(data);
  jpeg_destroy_decompress(&cinfo);
  return img;
}

}  // namespace

ImageBuffer load_image(const std::filesystem::path& path) {
  FileHandle file(path, "rb");
  require(file.get() != nullptr, "cannot open image ", path.string());
  unsigned char sig[8] = {0};
  const std::size_t got = std::fread(sig, 1, sizeof(sig), file.get());
  std::rewind(file.get());
  static const unsigned char kPngSig[8] = {0x89, 'P', 'N', 'G',
                                           0x0d, 0x0a, 0x1a, 0x0a};
  if (got >= 8 && std::memcmp(sig, kPngSig, 8) == 0) {
    return load_png_file(file.get(), path);
  }
  if (got >= 2 && sig[0] == 0xff && sig[1] == 0xd8) {
    return load_jpeg_file(file.get(), path);
  }
  fail("unrecognized image format for ", path.string(),
       " (expected PNG or JPEG)");
}

void save_png(const ImageBuffer& img, const std::filesystem::path& path) {
  validate(img);
  FileHandle file(path, "wb");
  require(file.get() != nullptr, "cannot open ", path.string(),
          " for writing");

  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  require(png != nullptr, "libpng initialization failed");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    fail("libpng initialization failed");
  }

  png_bytep* volatile rows = nullptr;
  if (setjmp(png_jmpbuf(png))) {
    std::free(rows);
    png_destroy_write_struct(&png, &info);
    fail("cannot encode PNG ", path.string());
  }

  png_init_io(png, file.get());
  // Pinned encoder settings: equal buffers must produce identical bytes.
  png_set_compression_level(png, 6);
  png_set_filter(png, 0, PNG_FILTER_NONE);
  png_set_IHDR(png, info, img.width, img.height, 8,
               img.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  rows = static_cast<png_bytep*>(std::malloc(sizeof(png_bytep) * img.height));
  if (rows == nullptr) std::longjmp(png_jmpbuf(png), 1);
  const std::size_t row_bytes =
      static_cast<std::size_t>(img.width) * img.channels;
  for (int y = 0; y < img.height; ++y) {
    rows[y] = const_cast<png_bytep>(&img.pixels[y * row_bytes]);
  }
  png_write_image(png, rows);
  png_write_end(png, nullptr);
  std::free(rows);
  png_destroy_write_struct(&png, &info);
}

}  // namespace trapforge

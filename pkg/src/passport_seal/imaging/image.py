"""Image containers and PGM/PPM file I/O.

Pixel data is stored as float64 numpy arrays in [0, 1], shape (height,
width) for grayscale and (height, width, 3) for color. Arrays are marked
read-only after construction so images behave as immutable values.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import DimensionMismatch


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.float64)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class GrayImage:
    """Single-channel raster, luminance in [0, 1], row-major."""

    data: np.ndarray

    def __post_init__(self):
        a = self.data
        if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
            raise DimensionMismatch(f"gray image needs a 2-D array, got shape {a.shape}")
        if a.min() < 0.0 or a.max() > 1.0:
            raise ValueError("gray values must lie in [0, 1]")
        object.__setattr__(self, "data", _freeze(a))

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def height(self) -> int:
        return self.data.shape[0]


@dataclass(frozen=True)
class RgbImage:
    """Three-channel raster, each channel in [0, 1]."""

    data: np.ndarray

    def __post_init__(self):
        a = self.data
        if a.ndim != 3 or a.shape[2] != 3:
            raise DimensionMismatch(f"rgb image needs (h, w, 3), got shape {a.shape}")
        if a.min() < 0.0 or a.max() > 1.0:
            raise ValueError("rgb values must lie in [0, 1]")
        object.__setattr__(self, "data", _freeze(a))

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def height(self) -> int:
        return self.data.shape[0]

    def to_gray(self) -> GrayImage:
        """Rec.601 luma conversion."""
        r, g, b = self.data[:, :, 0], self.data[:, :, 1], self.data[:, :, 2]
        return GrayImage(np.clip(0.299 * r + 0.587 * g + 0.114 * b, 0.0, 1.0))


@dataclass(frozen=True)
class EdgeMap:
    """Binary per-pixel edge flags with the source image's dimensions."""

    edges: np.ndarray

    def __post_init__(self):
        a = np.ascontiguousarray(self.edges, dtype=bool)
        if a.ndim != 2:
            raise DimensionMismatch("edge map needs a 2-D array")
        a.setflags(write=False)
        object.__setattr__(self, "edges", a)

    @property
    def width(self) -> int:
        return self.edges.shape[1]

    @property
    def height(self) -> int:
        return self.edges.shape[0]


@dataclass(frozen=True)
class Component:
    id: int
    pixel_count: int
    bbox: tuple  # (x, y, w, h), tight


@dataclass(frozen=True)
class ComponentSet:
    """Labeling of a binary image: labels[y, x] = component id, 0 = background."""

    labels: np.ndarray
    components: list = field(default_factory=list)

    def __post_init__(self):
        a = np.ascontiguousarray(self.labels, dtype=np.int32)
        a.setflags(write=False)
        object.__setattr__(self, "labels", a)

    def __len__(self):
        return len(self.components)


# --- 8-bit file formats ------------------------------------------------------

def _quantize(a: np.ndarray) -> np.ndarray:
    # round-half-up, matching the spec'd byte mapping exactly
    return np.floor(a * 255.0 + 0.5).astype(np.uint8)


def write_pgm(img: GrayImage, path, comment: str | None = None) -> None:
    with open(path, "wb") as f:
        f.write(b"P5\n")
        if comment:
            f.write(b"# " + comment.encode("utf-8") + b"\n")
        f.write(f"{img.width} {img.height}\n255\n".encode("ascii"))
        f.write(_quantize(img.data).tobytes())


def write_ppm(img: RgbImage, path, comment: str | None = None) -> None:
    with open(path, "wb") as f:
        f.write(b"P6\n")
        if comment:
            f.write(b"# " + comment.encode("utf-8") + b"\n")
        f.write(f"{img.width} {img.height}\n255\n".encode("ascii"))
        f.write(_quantize(img.data).tobytes())


def _read_netpbm_header(f, magic: bytes):
    if f.read(2) != magic:
        raise ValueError(f"not a {magic.decode()} file")
    fields = []
    comments = []
    token = b""
    while len(fields) < 3:
        c = f.read(1)
        if not c:
            raise ValueError("truncated header")
        if c == b"#":
            line = b""
            while c not in (b"\n", b""):
                c = f.read(1)
                line += c
            comments.append(line.decode("utf-8", "replace").strip())
            continue
        if c.isspace():
            if token:
                fields.append(int(token))
                token = b""
        else:
            token += c
    width, height, maxval = fields
    if maxval != 255:
        raise ValueError(f"only maxval 255 supported, got {maxval}")
    return width, height, comments


def read_pgm(path, with_comments: bool = False):
    with open(path, "rb") as f:
        w, h, comments = _read_netpbm_header(f, b"P5")
        raw = f.read(w * h)
        if len(raw) != w * h:
            raise ValueError("truncated pixel data")
    img = GrayImage(np.frombuffer(raw, dtype=np.uint8).reshape(h, w) / 255.0)
    return (img, comments) if with_comments else img


def read_ppm(path, with_comments: bool = False):
    with open(path, "rb") as f:
        w, h, comments = _read_netpbm_header(f, b"P6")
        raw = f.read(w * h * 3)
        if len(raw) != w * h * 3:
            raise ValueError("truncated pixel data")
    img = RgbImage(np.frombuffer(raw, dtype=np.uint8).reshape(h, w, 3) / 255.0)
    return (img, comments) if with_comments else img


def resample_bilinear(data: np.ndarray, out_w: int, out_h: int) -> np.ndarray:
    """Bilinear resampling of a 2-D array to (out_h, out_w), clamp-to-edge.

    Samples are aligned so the corner pixel centers of input and output
    coincide (the usual align-corners convention for small patches).
    """
    h, w = data.shape
    if out_w < 1 or out_h < 1:
        raise DimensionMismatch("resample target must be >= 1x1")
    xs = np.linspace(0.0, w - 1.0, out_w) if out_w > 1 else np.array([(w - 1) / 2.0])
    ys = np.linspace(0.0, h - 1.0, out_h) if out_h > 1 else np.array([(h - 1) / 2.0])
    x0 = np.clip(np.floor(xs).astype(np.int64), 0, w - 1)
    y0 = np.clip(np.floor(ys).astype(np.int64), 0, h - 1)
    x1 = np.minimum(x0 + 1, w - 1)
    y1 = np.minimum(y0 + 1, h - 1)
    fx = xs - x0
    fy = ys - y0
    top = data[y0][:, x0] * (1 - fx) + data[y0][:, x1] * fx
    bot = data[y1][:, x0] * (1 - fx) + data[y1][:, x1] * fx
    return top * (1 - fy[:, None]) + bot * fy[:, None]

# Copyright 2026 The bglemma Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Bulgarian word form generation and dictionary lemmatization."""

import os as _os

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
from ._core import load_builtin as _load_builtin

_ASSET = _os.path.join(_os.path.dirname(__file__), "builtin.bglx")


def load_builtin(asset=None):
    """Load the bundled sample dictionary.

    Uses `asset` when given, then $BGLEMMA_BUILTIN_DICT, then the copy
    installed next to this package, then the build-tree location.
    """
    if asset is not None:
        return _load_builtin(asset)
    if not _os.environ.get("BGLEMMA_BUILTIN_DICT") and _os.path.exists(_ASSET):
        return _load_builtin(_ASSET)
    return _load_builtin()

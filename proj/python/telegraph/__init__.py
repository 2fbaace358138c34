# Copyright 2026 The Telegraph Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Qubit dynamics under random telegraph and Ornstein-Uhlenbeck noise."""

from telegraph._telegraph import *  # noqa: F401,F403
from telegraph._telegraph import __version__  # noqa: F401

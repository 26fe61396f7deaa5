"""命令行报告模块

输入文档解析、报告文档组装与文本/JSON 渲染。
"""

from .input_document import (
    DocumentOptions,
    InputDocument,
    build_matrix,
    load_family,
    load_germ,
    parse_input_document,
)
from .documents import GenericitySettings, ReportDocument, family_document, germ_document, report_schema
from .render import render_json, render_schema, render_text

__all__ = [
    "DocumentOptions",
    "InputDocument",
    "build_matrix",
    "load_family",
    "load_germ",
    "parse_input_document",
    "GenericitySettings",
    "ReportDocument",
    "family_document",
    "germ_document",
    "report_schema",
    "render_json",
    "render_schema",
    "render_text",
]

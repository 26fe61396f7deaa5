#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
命令行与报告测试

覆盖输入文档解析、配置合并、报告文档渲染以及命令行退出码。
"""

import io
import json
import logging
import os
import shutil
import sys
import tempfile
import unittest
from unittest import mock

# 添加项目根目录到Python路径
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.config.manager import ConfigManager, parse_samples
from src.errors import InputDocumentError, MatrixIndexError, UnknownVariableError
from src.invariants.genericity import GenericityContext
from src.invariants.report import vanishing_euler
from src.main import run
from src.model.determinantal import verify_ids
from src.reporting.documents import germ_document, report_schema
from src.reporting.input_document import build_matrix, load_family, load_germ, parse_input_document
from src.reporting.render import render_json, render_text
from src.utils.logger import _loggers, get_logger, setup_logger

SURFACE = """# C^4 中的曲面
vars x y z w
s 2
matrix
x, y, z
y, z, w
"""

FAMILY = """vars x y z w
param t
s 2
matrix
x, y, z
y, z, w + t*x
options samples=1/2 mode=generic
"""


class TestInputDocument(unittest.TestCase):
    """输入文档解析"""

    def test_parse_surface(self):
        doc = parse_input_document(SURFACE)
        self.assertEqual(doc.variables, ['x', 'y', 'z', 'w'])
        self.assertEqual(doc.s, 2)
        self.assertEqual(doc.rows, [['x', 'y', 'z'], ['y', 'z', 'w']])
        self.assertEqual(doc.row_lines, [5, 6])
        self.assertFalse(doc.is_family)

    def test_parse_family_options(self):
        doc = parse_input_document(FAMILY)
        self.assertTrue(doc.is_family)
        self.assertEqual(doc.options.samples, ['1/2'])
        self.assertEqual(doc.options.as_config(), {'analysis.samples': ['1/2'], 'analysis.mode': 'generic'})

    def test_errors_carry_line_numbers(self):
        cases = {
            "vars x y\nfoo 3\n": 2,
            "vars x y\ns 1\nmatrix\nx, y\nx\n": 5,
            "vars x x\n": 1,
            "vars x y\ns one\n": 2,
            "vars x y\ns 1\nmatrix\nx, y\noptions seed=abc\n": 5,
            "vars x y\ns 1\nmatrix\nx, y\noptions colour=red\n": 5,
            "vars x y\nvars z\n": 2,
        }
        for text, line in cases.items():
            with self.subTest(text=text):
                with self.assertRaises(InputDocumentError) as ctx:
                    parse_input_document(text)
                self.assertEqual(ctx.exception.line, line)

    def test_missing_sections(self):
        with self.assertRaises(InputDocumentError):
            parse_input_document("vars x y\nmatrix\nx, y\n")
        with self.assertRaises(InputDocumentError):
            parse_input_document("vars x y\ns 1\nmatrix\n")

    def test_parameter_cannot_be_variable(self):
        with self.assertRaises(InputDocumentError):
            parse_input_document("vars x t\nparam t\ns 1\nmatrix\nx, t\n")

    def test_unknown_variable_in_entry(self):
        doc = parse_input_document("vars x y\ns 1\nmatrix\nx, q\n")
        with self.assertRaises(InputDocumentError) as ctx:
            build_matrix(doc)
        self.assertEqual(ctx.exception.line, 4)
        self.assertIsInstance(ctx.exception.__cause__, UnknownVariableError)

    def test_s_out_of_range(self):
        with self.assertRaises(MatrixIndexError):
            build_matrix(parse_input_document("vars x y\ns 2\nmatrix\nx, y\n"))

    def test_command_mismatch(self):
        with self.assertRaises(InputDocumentError):
            load_germ(parse_input_document(FAMILY))
        with self.assertRaises(InputDocumentError):
            load_family(parse_input_document(SURFACE))


class TestConfigManager(unittest.TestCase):
    """配置管理"""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp(prefix='ids_config_test_')

    def tearDown(self):
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def test_defaults(self):
        with mock.patch.dict(os.environ, {}, clear=True):
            config = ConfigManager()
        self.assertEqual(config.get('analysis.seed'), 20240601)
        self.assertEqual(config.get('analysis.coefficient_bound'), 50)
        self.assertEqual(config.get('analysis.mode'), 'generic')
        self.assertIsNone(config.get('engine.timeout'))
        self.assertEqual(config.get('missing.key', 'fallback'), 'fallback')

    def test_environment_overrides(self):
        with mock.patch.dict(os.environ, {'IDS_SEED': '11', 'IDS_SAMPLES': '1/2, 2/4,3'}, clear=True):
            config = ConfigManager()
        self.assertEqual(config.get('analysis.seed'), 11)
        self.assertEqual(config.get('analysis.samples'), ['1/2', '1/2', '3'])

    def test_invalid_environment(self):
        with mock.patch.dict(os.environ, {'IDS_COEFFICIENT_BOUND': 'many'}, clear=True):
            with self.assertRaises(ValueError):
                ConfigManager()

    def test_yaml_file_and_save(self):
        path = os.path.join(self.temp_dir, 'analysis.yaml')
        with open(path, 'w', encoding='utf-8') as f:
            f.write("analysis:\n  seed: 5\n  mode: sampled\n  samples: ['1/3']\n")
        with mock.patch.dict(os.environ, {}, clear=True):
            config = ConfigManager(path)
            self.assertEqual(config.get('analysis.seed'), 5)
            self.assertEqual(config.get('analysis.retry_budget'), 5)
            config.update('analysis.seed', 6)
            saved = os.path.join(self.temp_dir, 'saved.yaml')
            config.save(saved)
            self.assertEqual(ConfigManager(saved).to_dict(), config.to_dict())

    def test_missing_file(self):
        with self.assertRaises(FileNotFoundError):
            ConfigManager(os.path.join(self.temp_dir, 'absent.yaml'))

    def test_update_validates(self):
        with mock.patch.dict(os.environ, {}, clear=True):
            config = ConfigManager()
        with self.assertRaises(ValueError):
            config.update('analysis.mode', 'exhaustive')

    def test_parse_samples(self):
        self.assertEqual(parse_samples("1/2,1/3,,1/5"), ['1/2', '1/3', '1/5'])
        with self.assertRaises(ValueError):
            parse_samples("1/0")

    def test_logging_levels(self):
        with mock.patch.dict(os.environ, {'LOG_CONSOLE_LEVEL': 'error', 'LOG_FILE_LEVEL': 'DEBUG'}, clear=True):
            config = ConfigManager()
        self.assertEqual(config.get('logging.console_level'), 'error')
        self.assertEqual(config.get('logging.file_level'), 'DEBUG')
        with mock.patch.dict(os.environ, {'LOG_LEVEL': 'LOUD'}, clear=True):
            with self.assertRaises(ValueError):
                ConfigManager()


class TestLogger(unittest.TestCase):
    """日志器设置"""

    NAME = 'ids_logger_test'

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp(prefix='ids_logger_test_')

    def tearDown(self):
        logger = logging.getLogger(self.NAME)
        for handler in logger.handlers[:]:
            logger.removeHandler(handler)
            handler.close()
        _loggers.pop(self.NAME, None)
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def test_repeated_setup_replaces_handlers(self):
        first = setup_logger(self.NAME)
        second = setup_logger(self.NAME, level='DEBUG')
        self.assertIs(first, second)
        self.assertEqual(len(second.handlers), 1)
        self.assertEqual(second.level, logging.DEBUG)
        self.assertIs(get_logger(self.NAME), second)
        self.assertIs(_loggers[self.NAME], second)

    def test_console_and_file_levels(self):
        path = os.path.join(self.temp_dir, 'logs', 'run.log')
        stderr = io.StringIO()
        with mock.patch('sys.stderr', stderr):
            logger = setup_logger(self.NAME, level='INFO', log_file=path, console_level='ERROR', file_level='DEBUG')
            logger.debug("调试消息")
            logger.warning("警告消息")
            logger.error("错误消息")
        for handler in logger.handlers:
            handler.flush()
        self.assertEqual(logger.level, logging.DEBUG)
        self.assertNotIn("警告消息", stderr.getvalue())
        self.assertIn("错误消息", stderr.getvalue())
        with open(path, encoding='utf-8') as f:
            content = f.read()
        for message in ("调试消息", "警告消息", "错误消息"):
            self.assertIn(message, content)

    def test_unknown_level_falls_back_to_info(self):
        logger = setup_logger(self.NAME, level='LOUD')
        self.assertEqual(logger.level, logging.INFO)

    def test_package_children_propagate(self):
        child = get_logger('src.engine.logger_test_child')
        self.assertTrue(child.propagate)
        self.assertFalse(child.handlers)
        self.assertIs(_loggers['src.engine.logger_test_child'], child)


class TestReportDocument(unittest.TestCase):
    """报告文档与渲染"""

    @classmethod
    def setUpClass(cls):
        cls.ctx = GenericityContext(20240601)
        germ = load_germ(parse_input_document(SURFACE))
        cls.certificate = verify_ids(germ)
        cls.report = vanishing_euler(germ, cls.ctx, cls.certificate)
        cls.document = germ_document(SURFACE, cls.ctx, cls.certificate, cls.report)

    def test_json_document(self):
        data = json.loads(render_json(self.document))
        self.assertEqual(data['command'], 'analyze')
        self.assertEqual(data['invariants']['m'], [3, 4, 3])
        self.assertEqual(data['invariants']['nu'], 1)
        self.assertEqual(data['genericity']['seed'], 20240601)
        self.assertTrue(data['certificate']['smooth_off_origin'])
        self.assertNotIn('ids_certificate', data['invariants'])
        self.assertIsNone(data['timings'])
        self.assertEqual(len(data['input_digest']), 64)
        self.assertEqual(list(data), sorted(data))
        self.assertEqual(list(data['invariants']), sorted(data['invariants']))

    def test_caveats(self):
        caveats = self.document.caveats
        self.assertTrue(any("既约" in caveat for caveat in caveats))
        self.assertTrue(any("1-连通" in caveat for caveat in caveats))

    def test_render_is_deterministic(self):
        again = germ_document(SURFACE, self.ctx, self.certificate, self.report)
        self.assertEqual(render_text(again), render_text(self.document))
        self.assertEqual(render_json(again), render_json(self.document))

    def test_text_sections(self):
        text = render_text(self.document)
        self.assertIn("IDS 证书", text)
        self.assertIn("3, 4, 3", text)
        self.assertIn("  | y, z, w", text)

    def test_schema(self):
        schema = report_schema()
        self.assertIn('input_digest', schema['properties'])
        self.assertIn('caveats', schema['properties'])


class TestCommandLine(unittest.TestCase):
    """命令行退出码与输出"""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp(prefix='ids_cli_test_')
        self.env = mock.patch.dict(os.environ, {'LOG_LEVEL': 'WARNING'}, clear=True)
        self.env.start()

    def tearDown(self):
        self.env.stop()
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def _write(self, name, text):
        path = os.path.join(self.temp_dir, name)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        return path

    def _run_json(self, *argv):
        output = os.path.join(self.temp_dir, 'report.json')
        code = run(list(argv) + ['--json', '-o', output])
        with open(output, 'r', encoding='utf-8') as f:
            return code, json.load(f)

    def test_analyze_surface(self):
        code, data = self._run_json('analyze', self._write('surface.ids', SURFACE))
        self.assertEqual(code, 0)
        self.assertEqual(data['invariants']['m'], [3, 4, 3])
        self.assertEqual(data['invariants']['chi_smoothing'], 2)

    def test_byte_identical_reports(self):
        path = self._write('surface.ids', SURFACE)
        first = os.path.join(self.temp_dir, 'first.txt')
        second = os.path.join(self.temp_dir, 'second.txt')
        self.assertEqual(run(['analyze', path, '-o', first]), 0)
        self.assertEqual(run(['analyze', path, '-o', second]), 0)
        with open(first, 'rb') as a, open(second, 'rb') as b:
            self.assertEqual(a.read(), b.read())

    def test_seed_precedence(self):
        path = self._write('a1.ids', "vars x y z\ns 1\nmatrix\nx^2 + y^2 + z^2\noptions seed=7\n")
        _, data = self._run_json('analyze', path)
        self.assertEqual(data['genericity']['seed'], 7)
        _, data = self._run_json('analyze', path, '--seed', '11')
        self.assertEqual(data['genericity']['seed'], 11)
        self.assertEqual(data['invariants']['m'], [2, 2, 2])

    def test_timings_opt_in(self):
        code, data = self._run_json('analyze', self._write('surface.ids', SURFACE), '--timings')
        self.assertEqual(code, 0)
        self.assertIn('certificate', data['timings'])

    def test_certificate_failure(self):
        path = self._write('cone.ids', "vars x y z\ns 1\nmatrix\nx^2 + y^2\n")
        code, data = self._run_json('analyze', path)
        self.assertEqual(code, 2)
        self.assertFalse(data['certificate']['smooth_off_origin'])
        self.assertIsNone(data['invariants'])

    def test_input_errors(self):
        self.assertEqual(run(['analyze', self._write('bad.ids', "vars x y\nfoo\n")]), 1)
        self.assertEqual(run(['analyze', os.path.join(self.temp_dir, 'absent.ids')]), 1)
        self.assertEqual(run(['analyze', self._write('family.ids', FAMILY)]), 1)
        path = self._write('surface.ids', SURFACE)
        self.assertEqual(run(['analyze', path, '--config', os.path.join(self.temp_dir, 'absent.yaml')]), 1)

    def test_model_rejection(self):
        path = self._write('flat.ids', "vars x y z w\ns 2\nmatrix\nx, y, z\n2*x, 2*y, 2*z\n")
        self.assertEqual(run(['analyze', path]), 5)

    def test_timeout(self):
        path = self._write('surface.ids', SURFACE)
        self.assertEqual(run(['analyze', path, '--timeout', '1e-9']), 4)

    def test_family_command(self):
        code, data = self._run_json('family', self._write('family.ids', FAMILY), '--mode', 'sampled')
        self.assertEqual(code, 0)
        self.assertEqual(data['mode'], 'sampled')
        self.assertTrue(data['family']['good'])
        self.assertEqual(data['family']['whitney_verdict'], 'WhitneyEquisingular')

    def test_schema_command(self):
        output = os.path.join(self.temp_dir, 'schema.json')
        self.assertEqual(run(['schema', '-o', output]), 0)
        with open(output, 'r', encoding='utf-8') as f:
            self.assertIn('properties', json.load(f))


if __name__ == '__main__':
    unittest.main()

# test_package.py - Complete package functionality test
"""
Smoke test for the sslocus package
Run this before packaging to ensure everything works correctly.
"""

import json
import os
import tempfile
import traceback


def test_basic_imports():
    """Test that all imports work correctly"""
    print("🔍 Testing imports...")

    try:
        from sslocus.models import GlobalSpec, PlaceSpec, SignaturePair
        from sslocus.local_geometry import local_factor_geometry
        from sslocus.decomposition import rz_geometry, shimura_ss_geometry
        from sslocus.field import build_field
        from sslocus.oracle import verify_counts
        from sslocus.manager import LocusManager
        print("  ✅ All component imports successful")
        return True

    except ImportError as e:
        print(f"  ❌ Import failed: {e}")
        return False


def test_local_table():
    """Test a few rows of the local geometry table"""
    print("\n📐 Testing local geometry table...")

    try:
        from sslocus.local_geometry import Relation, local_factor_geometry
        from sslocus.models import SignaturePair, SplittingType

        curve = local_factor_geometry(SplittingType.INERT, SignaturePair(1, 2), 3, 0)
        assert curve.points_per_component.value == 28, "Fermat curve should have 28 points at p=3"
        assert curve.double_counting_holds(), "Double counting identity should hold"
        print("  ✅ inert (1,2) row evaluates correctly")

        surface = local_factor_geometry(SplittingType.INERT, SignaturePair(2, 2), 3, 1)
        assert surface.neighbor_count(Relation.LINE) == 112, "Surface line neighbours should be 112"
        print("  ✅ inert (2,2) row evaluates correctly")

        assert local_factor_geometry(SplittingType.INERT, SignaturePair(0, 3), 3, 1).is_empty, \
            "inert (0,3) should be empty for odd j"
        print("  ✅ Emptiness rules work")
        return True

    except Exception as e:
        print(f"  ❌ Local table test failed: {e}")
        traceback.print_exc()
        return False


def test_product_geometry():
    """Test the product geometry for a mixed m=4 spec"""
    print("\n🧩 Testing product geometry...")

    try:
        from sslocus.decomposition import rz_geometry, shimura_ss_geometry
        from sslocus.models import GlobalSpec, PlaceSpec, SignaturePair, SplittingType

        spec = GlobalSpec(p=3, places=[
            PlaceSpec(SplittingType.INERT, SignaturePair(1, 3)),
            PlaceSpec(SplittingType.INERT, SignaturePair(2, 2)),
            PlaceSpec(SplittingType.SPLIT, SignaturePair(2, 2)),
        ])
        geometry = rz_geometry(spec, 0)
        assert geometry.dimension == 4, "Dimension should be d+2e+f = 4"
        assert geometry.profile.isomorphism_type == "C^1 x S^1 x P1^1", "Component type should be C x S x P1"
        print(f"  ✅ Dimension {geometry.dimension}, {len(geometry.classes)} intersection classes")

        locus = shimura_ss_geometry(spec)
        assert not locus.has_counts, "Supersingular locus report should omit counts"
        print("  ✅ Supersingular locus report works")
        return True

    except Exception as e:
        print(f"  ❌ Product geometry test failed: {e}")
        traceback.print_exc()
        return False


def test_oracle():
    """Test brute-force verification at p=3"""
    print("\n🔢 Testing finite geometry oracle...")

    try:
        from sslocus.oracle import verify_counts

        report = verify_counts(3)
        assert report.passed, f"Failed checks: {[check.name for check in report.failures]}"
        print(f"  ✅ {len(report.checks)} checks passed in {report.elapsed_ms} ms")
        return True

    except Exception as e:
        print(f"  ❌ Oracle test failed: {e}")
        traceback.print_exc()
        return False


def test_manager():
    """Test LocusManager with a spec file on disk"""
    print("\n🗂️ Testing LocusManager...")

    try:
        from sslocus.manager import LocusManager

        temp_dir = tempfile.mkdtemp()
        path = os.path.join(temp_dir, "spec.json")
        with open(path, "w") as f:
            json.dump({"p": 5, "report": "shimura",
                       "places": [{"splitting": "inert", "signature": [1, 2]}] * 2}, f)

        manager = LocusManager({"color": False})
        data = manager.describe(path)
        assert data["geometries"][0]["profile"]["isomorphism_type"] == "C^2", "Two Fermat curve factors expected"
        print("  ✅ describe works")

        page = manager.render(data, "html")
        assert "C^2" in page, "HTML page should include the component type"
        print("  ✅ HTML rendering works")

        # Clean up
        try:
            os.unlink(path)
            os.rmdir(temp_dir)
        except OSError:
            pass
        return True

    except Exception as e:
        print(f"  ❌ LocusManager test failed: {e}")
        traceback.print_exc()
        return False


def test_dependencies():
    """Test that all required dependencies are available"""
    print("\n📦 Testing dependencies...")

    try:
        import sympy
        print(f"  ✅ sympy {sympy.__version__} available")

        import fasthtml
        try:
            fh_version = fasthtml.__version__
        except AttributeError:
            fh_version = "installed"
        print(f"  ✅ fasthtml {fh_version} available")

        import monsterui
        try:
            mu_version = monsterui.__version__
        except AttributeError:
            mu_version = "installed"
        print(f"  ✅ monsterui {mu_version} available")

        import dotenv
        print("  ✅ python-dotenv available")
        return True

    except ImportError as e:
        print(f"  ❌ Missing dependency: {e}")
        return False


def main():
    """Run all tests"""
    print("🚀 sslocus Package Test Suite")
    print("=" * 50)

    tests = [
        test_dependencies,
        test_basic_imports,
        test_local_table,
        test_product_geometry,
        test_oracle,
        test_manager,
    ]

    results = []
    for test in tests:
        try:
            result = test()
            results.append(result)
        except Exception as e:
            print(f"  ❌ Test {test.__name__} crashed: {e}")
            results.append(False)

    print("\n" + "=" * 50)
    print("📊 Test Results Summary")
    print("=" * 50)

    passed = sum(results)
    total = len(results)

    for i, (test, result) in enumerate(zip(tests, results)):
        status = "✅ PASS" if result else "❌ FAIL"
        print(f"{i+1}. {test.__name__:<25} {status}")

    print(f"\nOverall: {passed}/{total} tests passed")

    if passed == total:
        print("🎉 All tests passed! Your package is ready for packaging.")
        return True
    else:
        print("⚠️  Some tests failed. Please fix issues before packaging.")
        return False


if __name__ == "__main__":
    success = main()
    exit(0 if success else 1)

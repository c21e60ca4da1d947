package poikit.util;

public class Foo {
    public int tag() {
        return 1;
    }
}

package poikit.model;

public class Foo {
    public int tag() {
        return 2;
    }
}

package poikit;

import java.util.List;
import java.util.Map;
import poikit.util.Foo;

public class Sheet {
    private List<Integer> widths;

    public int cellWidth(int col) {
        return widths.get(col);
    }

    public int cellWidth(int col, boolean padded) {
        int w = widths.get(col);
        return padded ? w + 2 : w;
    }

    public Foo firstFoo(Map<String, Foo> foos) {
        return foos.values().iterator().next();
    }
}

namespace PoiKit.Model
{
    public class Foo
    {
        public int Tag()
        {
            return 2;
        }
    }
}

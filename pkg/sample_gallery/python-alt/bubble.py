import altair as alt
from vega_datasets import data

cars = data.cars()

chart = alt.Chart(cars).mark_point(opacity=0.8).encode(
    x=alt.X("horsepower:Q", title="Horsepower"),
    y=alt.Y("mpg:Q", title="Miles per gallon"),
    size=alt.Size("weight:Q", title="Weight (lbs)"),
    tooltip=["horsepower", "mpg", "weight"],
)
chart = chart.properties(title="Horsepower vs efficiency sized by weight", width=480, height=320)
chart = chart.configure_axis(labelFontSize=11, titleFontSize=13)
chart.save("chart.html")
